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

#include <catch_amalgamated.hpp>

#include <set>

#include "roda/roda.hpp"

using namespace roda;

namespace {

const std::string kData = RODA_TEST_DATA_DIR;

const MwpRecord& parent_of(const DatasetResult& r, const std::string& id) {
  for (const auto& o : r.originals) {
    if (o.id == id) return o;
  }
  FAIL("missing parent " << id);
  return r.originals.front();
}

}  // namespace

TEST_CASE("the two cars record yields a verified distance problem", "[pipeline]") {
  DatasetResult r = augment_dataset(kData + "/fig1.json", {});
  REQUIRE(r.augmented.size() == 3);
  const AugmentedRecord& first = r.augmented.front();
  CHECK(first.equation_text == "x=10*(32+34)");
  CHECK(first.answer_surface == "660");
  CHECK(verify(first, r.originals.front()));

  AugmentedRecord tampered = first;
  tampered.equation_text = "x=10*(32-34)";
  VerifyReport report = verify_report(tampered, r.originals.front(), {});
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.failures.empty());

  AugmentedRecord two_questions = first;
  two_questions.text += " How many cars are there?";
  CHECK_FALSE(verify(two_questions, r.originals.front()));
}

TEST_CASE("every emitted record verifies", "[pipeline]") {
  for (const char* file : {"/corpus_zh.json", "/corpus_en.json", "/fig1.json"}) {
    DatasetResult r = augment_dataset(kData + file, {});
    CHECK_FALSE(r.augmented.empty());
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& o : r.originals) seen.emplace(o.text, o.equation_text);
    for (const auto& a : r.augmented) {
      INFO(a.id << ": " << a.text);
      CHECK(verify(a, parent_of(r, a.parent_id)));
      CHECK(seen.emplace(a.text, a.equation_text).second);
    }
  }
}

TEST_CASE("statistics are conserved", "[pipeline]") {
  for (const char* file : {"/corpus_zh.json", "/corpus_en.json"}) {
    DatasetResult r = augment_dataset(kData + file, {});
    const AugmentationStats& s = r.stats;
    CHECK(s.quarantined_problems == r.quarantined.size());
    CHECK(s.original_problems ==
          r.originals.size() + s.quarantined_problems + s.duplicate_originals);
    CHECK(s.candidate_numbers == s.accepted_numbers + s.irreversible_numbers());
    CHECK(s.candidate_numbers <= s.original_numbers);
    CHECK(s.emitted == s.augmented_problems());
    CHECK(s.emitted == r.augmented.size());
    Json j = to_json(s);
    for (const char* row : kStatRows) CHECK(j.contains(row));
  }
}

TEST_CASE("quarantine and filtering", "[pipeline]") {
  DatasetResult r = augment_dataset(kData + "/corpus_zh.json", {});
  REQUIRE(r.quarantined.size() == 1);
  CHECK(r.quarantined.front().id == "z11");
  CHECK(r.stats.filtered_problems == 1);
  for (const auto& a : r.augmented) CHECK(a.parent_id != "z2");

  DatasetResult en = augment_dataset(kData + "/corpus_en.json", {});
  CHECK(en.stats.filtered_problems == 1);
  CHECK(en.stats.rejections.at(RejectReason::kTextDuplicate) == 2);
}

TEST_CASE("empty input", "[pipeline]") {
  DatasetResult r = augment_records({}, {});
  CHECK(r.augmented.empty());
  CHECK(r.stats.original_problems == 0);
  CHECK(render_table(r.stats).find("Original Problems") != std::string::npos);
  CHECK_THROWS_AS(augment_dataset(kData + "/does_not_exist.json", {}), IoError);
}

TEST_CASE("runs are deterministic", "[pipeline]") {
  PipelineOptions o;
  o.ratio = Rational(1, 2);
  o.seed = 99;
  auto a = output_json(augment_dataset(kData + "/corpus_zh.json", o), true, 5).dump();
  auto b = output_json(augment_dataset(kData + "/corpus_zh.json", o), true, 5).dump();
  CHECK(a == b);
}

TEST_CASE("ratio sampling", "[pipeline]") {
  CHECK(sample_size(Rational(1), 12) == 12);
  CHECK(sample_size(Rational(224, 100), 10) == 22);
  auto idx = sample_indices(20, 5, 7);
  CHECK(idx.size() == 5);
  CHECK(std::is_sorted(idx.begin(), idx.end()));
  CHECK(std::set<std::size_t>(idx.begin(), idx.end()).size() == 5);
  CHECK(sample_indices(3, 10, 7).size() == 3);

  PipelineOptions o;
  o.ratio = Rational(1);
  DatasetResult one = augment_dataset(kData + "/corpus_en.json", o);
  DatasetResult all = augment_dataset(kData + "/corpus_en.json", {});
  CHECK(one.augmented.size() == std::min(all.augmented.size(), one.stats.original_problems));
  o.ratio = Rational(1, 4);
  CHECK(augment_dataset(kData + "/corpus_en.json", o).augmented.size() == 2);
}

TEST_CASE("shuffle mixing", "[pipeline]") {
  std::vector<int> orig{1, 2, 3, 4}, aug{5, 6, 7};
  auto a = shuffle_mix(orig, aug, 3);
  auto b = shuffle_mix(orig, aug, 3);
  CHECK(a == b);
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("per problem cap and split exclusion", "[pipeline]") {
  PipelineOptions o;
  o.max_per_problem = 1;
  DatasetResult capped = augment_dataset(kData + "/fig1.json", o);
  CHECK(capped.augmented.size() == 1);
  CHECK(capped.stats.capped == 2);

  PipelineOptions ex;
  ex.excluded_parents = {"fig1"};
  DatasetResult excluded = augment_dataset(kData + "/fig1.json", ex);
  CHECK(excluded.augmented.empty());
  CHECK(excluded.stats.split_excluded == 3);
}

TEST_CASE("record formats", "[pipeline]") {
  MwpRecord r = record_from_json(
      Json{{"iIndex", 7}, {"sQuestion", "Tom has 5 apples."}, {"lEquations", {"X=(5.0+3.0)"}},
           {"lSolutions", {8.0}}});
  CHECK(r.id == "7");
  CHECK(r.equation_text == "x=(5+3)");
  CHECK(r.answer_surface == "8");
  CHECK(r.language == Language::kEn);

  std::istringstream concatenated("{\"id\": \"1\"}\n{\"id\": \"2\"}");
  CHECK(read_json_values(concatenated).size() == 2);
  std::istringstream array("[{\"id\": \"1\"}]");
  CHECK(read_json_values(array).size() == 1);
}
