// Copyright 2026 The unicyclic Authors
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

#include "unicyclic/bounds.hpp"
#include "unicyclic/charpoly.hpp"
#include "unicyclic/edge_list.hpp"
#include "unicyclic/enumerate.hpp"
#include "unicyclic/error.hpp"
#include "unicyclic/exact_linalg.hpp"
#include "unicyclic/generators.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/polynomial.hpp"
#include "unicyclic/spectra.hpp"
#include "unicyclic/structure.hpp"
#include "unicyclic/suites.hpp"
#include "unicyclic/sweep.hpp"
#include "unicyclic/witnesses.hpp"
