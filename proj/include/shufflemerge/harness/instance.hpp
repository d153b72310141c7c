#pragma once

// Merge problem instances: generators, the text file format, and the
// buffered reference merge.
//
// File format:
//   line 1: "nL nR"
//   line 2: nL + nR signed decimal keys, left run then right run
//   line 3: optional payload tags "L:index" / "R:index", one per key

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "../common.hpp"
#include "splitmix64.hpp"

namespace shufflemerge::harness {

enum class Kind : unsigned char { random, adversarial, dupes };

inline const char* to_string(Kind k) noexcept {
  switch (k) {
    case Kind::random: return "random";
    case Kind::adversarial: return "adversarial";
    case Kind::dupes: return "dupes";
  }
  return "unknown";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
  if (s == "random") return Kind::random;
  if (s == "adversarial") return Kind::adversarial;
  if (s == "dupes") return Kind::dupes;
  return std::nullopt;
}

struct Tag {
  Origin origin = Origin::left;
  std::uint32_t index = 0;
  friend bool operator==(const Tag&, const Tag&) = default;
};

/// A key with a stability payload that the ordering never looks at.
struct Item {
  std::int64_t key = 0;
  Tag tag;
  friend bool operator==(const Item&, const Item&) = default;
};

struct KeyLess {
  bool operator()(const Item& a, const Item& b) const noexcept { return a.key < b.key; }
};

struct OriginOf {
  Origin operator()(const Item& it) const noexcept { return it.tag.origin; }
};

struct Instance {
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;
  std::optional<std::vector<Tag>> payloads;
  Kind kind = Kind::random;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return left.size() + right.size(); }

  // Provenance (kind, seed) is not stored in files and not compared.
  friend bool operator==(const Instance& a, const Instance& b) {
    return a.left == b.left && a.right == b.right && a.payloads == b.payloads;
  }
};

inline std::vector<Tag> default_tags(std::size_t n_left, std::size_t n_right) {
  std::vector<Tag> tags;
  tags.reserve(n_left + n_right);
  for (std::size_t k = 0; k < n_left + n_right; ++k) {
    tags.push_back({k < n_left ? Origin::left : Origin::right, static_cast<std::uint32_t>(k)});
  }
  return tags;
}

/// Left run then right run, each key tagged with its payload (or with its
/// origin and position when the instance carries none).
inline std::vector<Item> to_items(const Instance& inst) {
  const auto tags = inst.payloads ? *inst.payloads : default_tags(inst.left.size(), inst.right.size());
  std::vector<Item> items;
  items.reserve(inst.size());
  for (std::size_t k = 0; k < inst.left.size(); ++k) items.push_back({inst.left[k], tags[k]});
  for (std::size_t k = 0; k < inst.right.size(); ++k) {
    items.push_back({inst.right[k], tags[inst.left.size() + k]});
  }
  return items;
}

/// Keys 1..n; a uniformly random k-subset of positions (partial
/// Fisher-Yates) is left-origin, the rest right-origin.
inline Instance gen_random(std::size_t n, std::size_t k, std::uint64_t seed) {
  SHUFFLEMERGE_EXPECTS(k <= n, "gen_random needs k <= n");
  SplitMix64 rng(seed);
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  for (std::size_t t = 0; t < k; ++t) {
    const auto pick = t + static_cast<std::size_t>(rng.below(n - t));
    std::swap(pos[t], pos[pick]);
  }
  std::vector<bool> is_left(n, false);
  for (std::size_t t = 0; t < k; ++t) is_left[pos[t]] = true;

  Instance inst;
  inst.kind = Kind::random;
  inst.seed = seed;
  inst.left.reserve(k);
  inst.right.reserve(n - k);
  for (std::size_t p = 0; p < n; ++p) {
    (is_left[p] ? inst.left : inst.right).push_back(static_cast<std::int64_t>(p + 1));
  }
  return inst;
}

/// Left = 2m even keys 0..4m-2; right = -m..-1 then the odd keys 1..2m-1.
/// After the first scan P holds m evens and every later odd key forces a
/// rotation of all of P.
inline Instance gen_adversarial(std::size_t m) {
  SHUFFLEMERGE_EXPECTS(m >= 1, "gen_adversarial needs m >= 1");
  Instance inst;
  inst.kind = Kind::adversarial;
  const auto mm = static_cast<std::int64_t>(m);
  for (std::int64_t v = 0; v < 2 * mm; ++v) inst.left.push_back(2 * v);
  for (std::int64_t v = -mm; v < 0; ++v) inst.right.push_back(v);
  for (std::int64_t v = 0; v < mm; ++v) inst.right.push_back(2 * v + 1);
  return inst;
}

/// Two sorted runs over the alphabet {0..alphabet-1} with payload tags.
/// The left length is uniform in [0, n].
inline Instance gen_duplicates(std::size_t n, std::size_t alphabet, std::uint64_t seed) {
  SHUFFLEMERGE_EXPECTS(alphabet >= 1, "gen_duplicates needs alphabet >= 1");
  SplitMix64 rng(seed);
  const auto n_left = static_cast<std::size_t>(rng.below(n + 1));
  Instance inst;
  inst.kind = Kind::dupes;
  inst.seed = seed;
  for (std::size_t t = 0; t < n; ++t) {
    const auto key = static_cast<std::int64_t>(rng.below(alphabet));
    (t < n_left ? inst.left : inst.right).push_back(key);
  }
  std::sort(inst.left.begin(), inst.left.end());
  std::sort(inst.right.begin(), inst.right.end());
  inst.payloads = default_tags(inst.left.size(), inst.right.size());
  return inst;
}

/// Buffered two-finger merge; the left element wins ties.
inline std::vector<Item> oracle_merge(const Instance& inst) {
  const auto items = to_items(inst);
  const auto mid = items.begin() + static_cast<std::ptrdiff_t>(inst.left.size());
  std::vector<Item> out;
  out.reserve(items.size());
  auto a = items.begin();
  auto b = mid;
  while (a != mid && b != items.end()) {
    if (b->key < a->key) {
      out.push_back(*b++);
    } else {
      out.push_back(*a++);
    }
  }
  out.insert(out.end(), a, mid);
  out.insert(out.end(), b, items.end());
  return out;
}

inline bool is_sorted_instance(const Instance& inst) {
  return std::is_sorted(inst.left.begin(), inst.left.end()) &&
         std::is_sorted(inst.right.begin(), inst.right.end());
}

inline std::string serialize(const Instance& inst) {
  std::ostringstream os;
  os << inst.left.size() << ' ' << inst.right.size() << '\n';
  bool first = true;
  for (const auto* run : {&inst.left, &inst.right}) {
    for (auto key : *run) {
      if (!first) os << ' ';
      os << key;
      first = false;
    }
  }
  os << '\n';
  if (inst.payloads) {
    first = true;
    for (const auto& tag : *inst.payloads) {
      if (!first) os << ' ';
      os << (tag.origin == Origin::left ? 'L' : 'R') << ':' << tag.index;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [](const std::string& what) {
    throw std::runtime_error("instance parse error: " + what);
  };

  if (!std::getline(in, line)) fail("missing header line");
  std::size_t n_left = 0;
  std::size_t n_right = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> n_left >> n_right)) fail("header must be 'nL nR'");
    std::string extra;
    if (hs >> extra) fail("trailing tokens in header");
  }

  Instance inst;
  if (!std::getline(in, line) && n_left + n_right > 0) fail("missing key line");
  {
    std::istringstream ks(line);
    std::int64_t key = 0;
    std::vector<std::int64_t> keys;
    while (ks >> key) keys.push_back(key);
    if (!ks.eof()) fail("malformed key token");
    if (keys.size() != n_left + n_right) {
      fail("expected " + std::to_string(n_left + n_right) + " keys, found " +
           std::to_string(keys.size()));
    }
    inst.left.assign(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(n_left));
    inst.right.assign(keys.begin() + static_cast<std::ptrdiff_t>(n_left), keys.end());
  }

  // With no keys, a present but blank third line still means "payloads, none".
  if (std::getline(in, line) && (!line.empty() || inst.size() == 0)) {
    std::istringstream ps(line);
    std::string token;
    std::vector<Tag> tags;
    while (ps >> token) {
      if (token.size() < 3 || (token[0] != 'L' && token[0] != 'R') || token[1] != ':') {
        fail("bad payload token '" + token + "'");
      }
      Tag tag;
      tag.origin = token[0] == 'L' ? Origin::left : Origin::right;
      try {
        std::size_t used = 0;
        const auto idx = std::stoul(token.substr(2), &used);
        if (used != token.size() - 2) throw std::invalid_argument(token);
        tag.index = static_cast<std::uint32_t>(idx);
      } catch (const std::logic_error&) {
        fail("bad payload index in '" + token + "'");
      }
      tags.push_back(tag);
    }
    if (tags.size() != inst.size()) fail("payload count does not match key count");
    inst.payloads = std::move(tags);
  }
  return inst;
}

inline void write_instance_file(const std::string& path, const Instance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << serialize(inst);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

inline Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace shufflemerge::harness
