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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagmat/subset.hpp"

namespace flagmat {

enum class Errc {
  kBadField,
  kShapeMismatch,
  kIndexOutOfRange,
  kRankDeficient,
  kNoTransform,
  kFieldMismatch,
  kAxiomViolation,
  kBadRank,
  kOverlappingSets,
  kGroundTooLarge,
  kLayerNotMatroid,
  kNotALift,
  kRankCollision,
  kEmptyInterval,
  kEmptyResult,
  kLastLayer,
  kNoSuchLayer,
  kGroundSetMismatch,
  kNotElementaryLift,
  kConstructionFailed,
  kNotFull,
  kBudgetExhausted,
  kBadArgument,
  kFieldTooSmall,
  kSingleLevel,
  kLevelCollapse,
  kSearchSpaceTooLarge,
  kBadPartition,
  kTrivialLiftLayer,
  kChainNotGrounded,
  kConfigInconsistent,
  kInternal,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::kBadField: return "BadField";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kRankDeficient: return "RankDeficient";
    case Errc::kNoTransform: return "NoTransform";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kAxiomViolation: return "AxiomViolation";
    case Errc::kBadRank: return "BadRank";
    case Errc::kOverlappingSets: return "OverlappingSets";
    case Errc::kGroundTooLarge: return "GroundTooLarge";
    case Errc::kLayerNotMatroid: return "LayerNotMatroid";
    case Errc::kNotALift: return "NotALift";
    case Errc::kRankCollision: return "RankCollision";
    case Errc::kEmptyInterval: return "EmptyInterval";
    case Errc::kEmptyResult: return "EmptyResult";
    case Errc::kLastLayer: return "LastLayer";
    case Errc::kNoSuchLayer: return "NoSuchLayer";
    case Errc::kGroundSetMismatch: return "GroundSetMismatch";
    case Errc::kNotElementaryLift: return "NotElementaryLift";
    case Errc::kConstructionFailed: return "ConstructionFailed";
    case Errc::kNotFull: return "NotFull";
    case Errc::kBudgetExhausted: return "BudgetExhausted";
    case Errc::kBadArgument: return "BadArgument";
    case Errc::kFieldTooSmall: return "FieldTooSmall";
    case Errc::kSingleLevel: return "SingleLevel";
    case Errc::kLevelCollapse: return "LevelCollapse";
    case Errc::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::kBadPartition: return "BadPartition";
    case Errc::kTrivialLiftLayer: return "TrivialLiftLayer";
    case Errc::kChainNotGrounded: return "ChainNotGrounded";
    case Errc::kConfigInconsistent: return "ConfigInconsistent";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

/// Library error. `witness` carries the concrete sets behind a failure when
/// there are any (e.g. the two sets violating an axiom). `index` names the
/// failing axiom, layer or step where that is meaningful, and is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, std::vector<Subset> witness = {},
        int index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)),
        witness_(std::move(witness)),
        index_(index) {}

  Errc code() const { return code_; }
  const std::string& detail() const { return detail_; }
  const std::vector<Subset>& witness() const { return witness_; }
  int index() const { return index_; }

 private:
  Errc code_;
  std::string detail_;
  std::vector<Subset> witness_;
  int index_;
};

}  // namespace flagmat
