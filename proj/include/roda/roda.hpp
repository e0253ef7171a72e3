//
// Copyright 2026 The RODA Authors
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
//

#ifndef RODA_RODA_HPP_
#define RODA_RODA_HPP_

#include "roda/error.hpp"
#include "roda/rational.hpp"
#include "roda/expr.hpp"
#include "roda/parse.hpp"
#include "roda/evaluate.hpp"
#include "roda/serialize.hpp"
#include "roda/template.hpp"
#include "roda/text.hpp"
#include "roda/mentions.hpp"
#include "roda/filter.hpp"
#include "roda/inversion.hpp"
#include "roda/normalize.hpp"
#include "roda/english.hpp"
#include "roda/pronouns.hpp"
#include "roda/transform.hpp"
#include "roda/record.hpp"
#include "roda/pipeline.hpp"

#endif  // RODA_RODA_HPP_
