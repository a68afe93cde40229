// SPDX-License-Identifier: Apache-2.0
//
// mmcr - hybrid precoding simulator for mmWave MIMO cognitive radio downlinks
// Copyright (C) 2026 The mmcr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMCR_MMCR_HPP
#define MMCR_MMCR_HPP

#include "mmcr/analog.hpp"
#include "mmcr/baselines.hpp"
#include "mmcr/channel.hpp"
#include "mmcr/config.hpp"
#include "mmcr/csv.hpp"
#include "mmcr/digital.hpp"
#include "mmcr/linalg.hpp"
#include "mmcr/plot.hpp"
#include "mmcr/power.hpp"
#include "mmcr/rng.hpp"
#include "mmcr/sweep.hpp"
#include "mmcr/types.hpp"

#endif
