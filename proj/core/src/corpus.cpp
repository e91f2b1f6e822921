#include "primegb/corpus.hpp"

#include <array>
#include <cstddef>

namespace primegb {

namespace detail {
struct CorpusFile {
  std::string_view id;
  std::string_view text;
};
extern const CorpusFile kCorpusFiles[];
extern const std::size_t kCorpusFileCount;
extern const std::string_view kCorpusManifest;
}  // namespace detail

namespace {

struct Meta {
  std::string_view id;
  std::string_view title;
  // names[0] is mapped to 2, names[1] to 3, ...
  std::string_view order;
};

// Variable orders under which the reference basis sizes are obtained.
constexpr std::array<Meta, 13> kMeta{{
    {"example-1", "Example 1", "abc"},
    {"example-2", "Example 2", "abc"},
    {"example-3", "Example 3", "abc"},
    {"cyclic-4", "Cyclic 4", "tzyx"},
    {"cyclic-5", "Cyclic 5", "utzyx"},
    {"gerdt-1", "Gerdt 1", "uvwzxty"},
    {"gerdt-2", "Gerdt 2", "utzyx"},
    {"gerdt-3", "Gerdt 3", "tzyx"},
    {"arnborg-lazard", "Arnborg-Lazard", "zyx"},
    {"parametric-curve", "Parametric Curve", "xyzt"},
    {"katsura-4", "Katsura 4", "utzyx"},
    {"arnold-1", "Arnold 1", "yxz"},
    {"arnold-2", "Arnold 2", "yxz"},
}};

std::array<CorpusEntry, kMeta.size()> build() {
  std::array<CorpusEntry, kMeta.size()> out{};
  for (std::size_t i = 0; i < kMeta.size(); ++i) {
    out[i] = {kMeta[i].id, kMeta[i].title, kMeta[i].order, {}};
    for (std::size_t f = 0; f < detail::kCorpusFileCount; ++f) {
      if (detail::kCorpusFiles[f].id == kMeta[i].id) out[i].text = detail::kCorpusFiles[f].text;
    }
  }
  return out;
}

bool same_name(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto fold = [](char c) {
      if (c == ' ' || c == '_') return '-';
      return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    };
    if (fold(a[i]) != fold(b[i])) return false;
  }
  return true;
}

}  // namespace

std::span<const CorpusEntry> corpus() {
  static const auto entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const auto& e : corpus()) {
    if (same_name(e.id, name) || same_name(e.title, name)) return e;
  }
  throw UnknownSystem(std::string(name));
}

PolySystem builtin(std::string_view name) {
  const auto& e = corpus_entry(name);
  return parse_system(e.text, e.default_order, std::string(e.id));
}

std::string_view corpus_manifest() { return detail::kCorpusManifest; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace primegb
