// Copyright 2026 The qroof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qroof/blocks.hpp"
#include "qroof/circuit.hpp"
#include "qroof/counts.hpp"
#include "qroof/error.hpp"
#include "qroof/linalg.hpp"
#include "qroof/machines.hpp"
#include "qroof/metrics.hpp"
#include "qroof/models.hpp"
#include "qroof/qasm.hpp"
#include "qroof/roofline.hpp"
#include "qroof/simulator.hpp"
#include "qroof/version.hpp"
#include "qroof/weyl.hpp"
