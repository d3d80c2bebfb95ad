// Copyright 2026 The bhqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "bhqc/amplitude.hpp"
#include "bhqc/canned.hpp"
#include "bhqc/circuit.hpp"
#include "bhqc/classifier.hpp"
#include "bhqc/dsl.hpp"
#include "bhqc/gates.hpp"
#include "bhqc/gaussian_rational.hpp"
#include "bhqc/ket.hpp"
#include "bhqc/ledger.hpp"
#include "bhqc/operator.hpp"
#include "bhqc/text.hpp"
