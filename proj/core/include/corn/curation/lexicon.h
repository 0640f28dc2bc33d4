// Copyright 2026 The Corn Authors.
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

#ifndef CORN_CURATION_LEXICON_H_
#define CORN_CURATION_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "corn/common/labels.h"

namespace corn::curation {

using TermSet = std::set<std::string, std::less<>>;

// Positive and negative opinion words, lowercase, disjoint.
struct OpinionLexicon {
  TermSet positive;
  TermSet negative;

  // POS/NEG for a lowercase term, nullopt when absent.
  std::optional<Polarity> Lookup(std::string_view term) const;
  bool Contains(std::string_view term) const { return Lookup(term).has_value(); }
};

// Lowercases both lists and removes terms listed as both positive and
// negative; the number removed is stored in *ambiguous when non-null.
OpinionLexicon MakeLexicon(const TermSet& positive, const TermSet& negative,
                           size_t* ambiguous = nullptr);

// One term per line. Blank lines and lines starting with '#' or ';' are
// skipped. Throws Error(kIoError) naming the path when unreadable.
TermSet LoadTermList(const std::filesystem::path& path);

OpinionLexicon LoadOpinionLexicon(const std::filesystem::path& positive,
                                  const std::filesystem::path& negative,
                                  size_t* ambiguous = nullptr);

struct SeedAspectSet {
  std::string category;
  TermSet aspects;  // normalized (lowercase, single-spaced)
};

using SeedAspectMap = std::map<std::string, SeedAspectSet, std::less<>>;

// {"Category": ["term", ...], ...}. Empty terms are rejected with
// Error(kMalformedInput).
SeedAspectMap ParseSeedAspects(std::string_view json_text);
SeedAspectMap LoadSeedAspects(const std::filesystem::path& path);

}  // namespace corn::curation

#endif  // CORN_CURATION_LEXICON_H_
