// Copyright 2026 The qgc Authors
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

// Umbrella header.

#pragma once

#include "qgc/catalog.hpp"
#include "qgc/charfunc.hpp"
#include "qgc/degradability.hpp"
#include "qgc/errors.hpp"
#include "qgc/grassmann.hpp"
#include "qgc/green.hpp"
#include "qgc/io.hpp"
#include "qgc/operator_element.hpp"
#include "qgc/qubit.hpp"
#include "qgc/random.hpp"
#include "qgc/verify.hpp"
