// Copyright 2023 The Authors.
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

#include "flagmat/certificate.hpp"
#include "flagmat/classify.hpp"
#include "flagmat/error.hpp"
#include "flagmat/flag.hpp"
#include "flagmat/gf_linalg.hpp"
#include "flagmat/graph.hpp"
#include "flagmat/graphic.hpp"
#include "flagmat/io.hpp"
#include "flagmat/lift.hpp"
#include "flagmat/linear_flag.hpp"
#include "flagmat/major.hpp"
#include "flagmat/matroid.hpp"
#include "flagmat/representability.hpp"
#include "flagmat/subset.hpp"
