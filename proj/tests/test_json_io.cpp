#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "effalg/corpus.hpp"
#include "effalg/json_io.hpp"

using namespace effalg;

namespace {

const std::string kData = EFFALG_DATA_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST(JsonIo, AlgebraRoundTripIsByteIdentical) {
  for (const char* name : {"c4", "mo2", "boolean2"}) {
    const std::string path = kData + "/algebras/" + name + ".json";
    const std::string bytes = slurp(path);
    const EffectAlgebra e = algebra_from_json(parse_json(bytes, path));
    EXPECT_EQ(canonical_dump(to_json(e)), bytes) << name;
  }
}

TEST(JsonIo, PermutedSumEntriesGiveSameBytes) {
  Json j = to_json(EffectAlgebra::boolean(2));
  Json reversed = j;
  std::reverse(reversed["sum"].begin(), reversed["sum"].end());
  EXPECT_EQ(canonical_dump(to_json(algebra_from_json(reversed))), canonical_dump(j));
}

TEST(JsonIo, RejectsUnknownFieldAndVersion) {
  Json j = to_json(EffectAlgebra::chain(2));
  Json extra = j;
  extra["colour"] = "blue";
  try {
    algebra_from_json(extra, "x");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("unknown field"), std::string::npos);
  }
  Json future = j;
  future["version"] = 2;
  EXPECT_THROW(algebra_from_json(future), InputError);
  Json wrong = j;
  wrong["kind"] = "pog";
  EXPECT_THROW(algebra_from_json(wrong), InputError);
}

TEST(JsonIo, MalformedTextReportsPosition) {
  try {
    parse_json("{\"a\": [1, 2", "f.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("f.json:"), std::string::npos);
  }
}

TEST(JsonIo, InvalidAlgebraIsRejected) {
  Json j = to_json(EffectAlgebra::chain(2));
  j["sum"].push_back(Json::array({2, 2, 2}));
  EXPECT_NO_THROW(table_from_json(j));
  EXPECT_THROW(algebra_from_json(j), InputError);
}

TEST(JsonIo, PogRoundTrip) {
  const UnitalPoGroup a = pog_from_json(read_json_file(kData + "/groups/gr_mo2.json"));
  EXPECT_EQ(a.group.torsion_factors(), int_vec({2}));
  const UnitalPoGroup b = pog_from_json(to_json(a));
  EXPECT_EQ(canonical_dump(to_json(a)), canonical_dump(to_json(b)));
}

TEST(JsonIo, BigIntegersSurvive) {
  const UnitalPoGroup a = make_pog(FpAbGroup::free(1), {int_vec({1})}, IntVec{Int("123456789012345678901234567890")});
  const UnitalPoGroup b = pog_from_json(parse_json(canonical_dump(to_json(a)), "big"));
  EXPECT_EQ(b.unit.coords, a.unit.coords);
}

TEST(JsonIo, DiagramsLoadAndAreFunctorial) {
  for (const auto& entry : std::filesystem::directory_iterator(kData + "/diagrams")) {
    const EaDiagramFile d = ea_diagram_from_json(read_json_file(entry.path().string()));
    EXPECT_TRUE(d.diagram.functorial()) << entry.path();
    EXPECT_EQ(canonical_dump(to_json(d)), slurp(entry.path().string())) << entry.path();
  }
  for (const auto& entry : std::filesystem::directory_iterator(kData + "/pog_diagrams"))
    EXPECT_TRUE(pog_diagram_from_json(read_json_file(entry.path().string())).diagram.functorial());
}

TEST(JsonIo, NonFunctorialDiagramIsRejected) {
  Json j = read_json_file(kData + "/diagrams/span_c2_2_c2.json");
  j["maps"][0] = Json::array({0, 0});
  EXPECT_THROW(ea_diagram_from_json(j), InputError);
}

TEST(JsonIo, TensorCandidateLoads) {
  const TensorCandidate c = tensor_candidate_from_json(read_json_file(kData + "/candidates/c2_c2.json"));
  EXPECT_EQ(c.algebra.size(), 5);
}

TEST(Corpus, WriteLoadAndChecksum) {
  const auto dir = std::filesystem::temp_directory_path() / "effalg_corpus_test";
  std::filesystem::remove_all(dir);
  const CorpusWrite w = write_corpus(dir, 5);
  EXPECT_EQ(w.files, 10u);
  EXPECT_TRUE(w.complete);
  const Corpus c = load_corpus(dir);
  EXPECT_EQ(c.entries.size(), 10u);
  EXPECT_EQ(c.of_size_at_most(4).size(), 6u);
  std::ofstream(dir / corpus_file_name(4, 0), std::ios::app) << " ";
  EXPECT_THROW(load_corpus(dir), InputError);
  std::filesystem::remove_all(dir);
}
