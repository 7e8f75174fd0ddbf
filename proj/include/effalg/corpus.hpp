#pragma once
// The bundled corpus: every effect algebra up to a size bound, one canonical
// JSON file per isomorphism class, plus a manifest of FNV-1a checksums.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "effalg/enumerate.hpp"
#include "effalg/json_io.hpp"

namespace effalg {

inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << x;
  return os.str();
}

inline std::string corpus_file_name(int size, std::size_t index) {
  return "ea_" + std::to_string(size) + "_" + std::to_string(index) + ".json";
}

struct CorpusWrite {
  std::size_t files = 0;
  bool complete = true;
};

/// Writes ea_<size>_<index>.json for every class and MANIFEST.json.
inline CorpusWrite write_corpus(const std::filesystem::path& dir, int max_size) {
  std::filesystem::create_directories(dir);
  CorpusWrite w;
  Json files = Json::array();
  for (int n = 1; n <= max_size; ++n) {
    const EnumerationResult en = enumerate_effect_algebras(n);
    w.complete = w.complete && en.complete;
    for (std::size_t i = 0; i < en.algebras.size(); ++i) {
      const std::string name = corpus_file_name(n, i);
      const std::string bytes = canonical_dump(to_json(en.algebras[i]));
      std::ofstream(dir / name, std::ios::binary) << bytes;
      files.push_back(Json{{"name", name}, {"size", n}, {"fnv1a", hex64(fnv1a64(bytes))}});
      ++w.files;
    }
  }
  Json manifest{{"version", kFormatVersion}, {"kind", "corpus_manifest"}, {"max_size", max_size},
                {"complete", w.complete}, {"files", files}};
  std::ofstream(dir / "MANIFEST.json", std::ios::binary) << canonical_dump(manifest);
  return w;
}

struct CorpusEntry {
  std::string name;
  EffectAlgebra algebra;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  int max_size = 0;
  bool complete = false;

  std::vector<EffectAlgebra> of_size_at_most(int n) const {
    std::vector<EffectAlgebra> out;
    for (const auto& e : entries)
      if (e.algebra.size() <= n) out.push_back(e.algebra);
    return out;
  }
};

/// Reads the manifest and every listed file; any checksum mismatch is an input error.
inline Corpus load_corpus(const std::filesystem::path& dir) {
  const Json m = read_json_file((dir / "MANIFEST.json").string());
  json_detail::expect_object(m, "MANIFEST", {"version", "kind", "max_size", "complete", "files"});
  json_detail::check_header(m, "MANIFEST", "corpus_manifest");
  Corpus c;
  c.max_size = static_cast<int>(json_detail::get_long(m.at("max_size"), "MANIFEST.max_size"));
  c.complete = m.at("complete").get<bool>();
  const Json& files = json_detail::array_at(m.at("files"), "MANIFEST.files");
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string p = "MANIFEST.files[" + std::to_string(i) + "]";
    json_detail::expect_object(files[i], p, {"name", "size", "fnv1a"});
    const std::string name = json_detail::get_string(files[i].at("name"), p + ".name");
    std::ifstream in(dir / name, std::ios::binary);
    if (!in) throw InputError((dir / name).string(), "listed in manifest but missing");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    if (hex64(fnv1a64(bytes)) != json_detail::get_string(files[i].at("fnv1a"), p + ".fnv1a"))
      throw InputError((dir / name).string(), "checksum mismatch");
    c.entries.push_back({name, algebra_from_json(parse_json(bytes, name))});
  }
  return c;
}

/// In-memory corpus, same order as the files.
inline Corpus generate_corpus(int max_size) {
  Corpus c;
  c.max_size = max_size;
  c.complete = true;
  for (int n = 1; n <= max_size; ++n) {
    const EnumerationResult en = enumerate_effect_algebras(n);
    c.complete = c.complete && en.complete;
    for (std::size_t i = 0; i < en.algebras.size(); ++i) c.entries.push_back({corpus_file_name(n, i), en.algebras[i]});
  }
  return c;
}

}  // namespace effalg
