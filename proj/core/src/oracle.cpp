#include "sd/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sd/surgery.hpp"
#include "sd/templates.hpp"

namespace sd {

namespace {

// --- canonical rooted trees and forests, for the n=0 enumeration ---

struct Tree {
  std::uint64_t size = 1;
  std::string enc;  // "(" + child encodings, largest first + ")"
  std::vector<const Tree*> children;
};

// table[s-1] holds every rooted tree with s nodes, in generation order
using TreeTable = std::vector<std::vector<Tree>>;

// enumerate multisets of trees with the given total size, non-increasing
// under the (size, index) order; a tree may repeat.  max_index is the
// exclusive index bound for trees of exactly max_size nodes.
template <typename Yield>
void forests_of(const TreeTable& table, std::uint64_t total, std::uint64_t max_size,
                std::size_t max_index, std::vector<const Tree*>& acc, Yield&& yield) {
  if (total == 0) {
    yield(acc);
    return;
  }
  for (std::uint64_t s = std::min(total, max_size); s >= 1; --s) {
    const auto& bucket = table[s - 1];
    const std::size_t start = s == max_size ? max_index : bucket.size();
    for (std::size_t idx = start; idx-- > 0;) {
      acc.push_back(&bucket[idx]);
      forests_of(table, total - s, s, idx + 1, acc, yield);
      acc.pop_back();
    }
  }
}

TreeTable build_tree_table(std::uint64_t max_size) {
  TreeTable table(max_size);
  table[0].push_back(Tree{1, "()", {}});
  for (std::uint64_t s = 2; s <= max_size; ++s) {
    std::vector<const Tree*> acc;
    forests_of(table, s - 1, s - 1, table[s - 2].size(), acc, [&](const auto& children) {
      Tree t;
      t.size = s;
      t.enc = "(";
      for (const Tree* c : children) t.enc += c->enc;
      t.enc += ")";
      t.children = children;
      table[s - 1].push_back(std::move(t));
    });
  }
  return table;
}

void flatten(const Tree& tree, std::size_t parent, NestingForest& forest) {
  const std::size_t self = forest.parent.size();
  forest.parent.push_back(parent);
  for (const Tree* c : tree.children) flatten(*c, self, forest);
}

}  // namespace

Census forest_census(const NestingForest& forest) {
  const std::size_t c = forest.parent.size();
  if (c == 0 || c % 2 != 0)
    throw Error(errc::invalid_parameter,
                "forest_census: a dissection needs a positive even number of circles");

  std::vector<std::uint64_t> child_count(c, 0);
  std::uint64_t roots = 0;
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t p = forest.parent[i];
    if (p == NestingForest::npos) {
      ++roots;
    } else if (p >= c || p == i) {
      throw Error(errc::invalid_parameter, "forest_census: bad parent index");
    } else {
      ++child_count[p];
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t cur = i, hops = 0;
    while (cur != NestingForest::npos) {
      cur = forest.parent[cur];
      if (++hops > c) throw Error(errc::invalid_parameter, "forest_census: nesting contains a cycle");
    }
  }

  Census::Entries entries;
  entries[roots] += 1;  // the outermost region
  for (std::size_t i = 0; i < c; ++i) entries[1 + child_count[i]] += 1;
  return Census::from_entries(entries);
}

std::set<Census> enumerate_n0(std::uint64_t max_circles) {
  if (max_circles < 2 || max_circles % 2 != 0 || max_circles > 12)
    throw Error(errc::invalid_parameter, "enumerate_n0: max_circles must be even and within 2..12");

  const TreeTable table = build_tree_table(max_circles);
  std::set<Census> out;
  for (std::uint64_t c = 2; c <= max_circles; c += 2) {
    std::vector<const Tree*> acc;
    forests_of(table, c, c, table[c - 1].size(), acc, [&](const auto& roots) {
      NestingForest forest;
      for (const Tree* t : roots) flatten(*t, NestingForest::npos, forest);
      out.insert(forest_census(forest));
    });
  }
  return out;
}

Certificate random_certificate(std::uint64_t seed, const CertificateBounds& bounds) {
  std::mt19937_64 rng(seed);
  const std::uint64_t max_faces = std::max<std::uint64_t>(bounds.max_faces, 3);

  std::vector<BaseTemplate> options{BaseTemplate::circles()};
  if (bounds.max_n >= 1) {
    const std::uint64_t discs_cap = max_faces >= 8 ? (max_faces - 2) / 6 : 0;
    const std::uint64_t annulus_cap = max_faces >= 9 ? (max_faces - 3) / 6 : 0;
    if (discs_cap >= 1)
      options.push_back(BaseTemplate::discs(1 + rng() % std::min(bounds.max_n, discs_cap)));
    if (annulus_cap >= 1)
      options.push_back(BaseTemplate::annulus(1 + rng() % std::min(bounds.max_n, annulus_cap)));
  }
  const BaseTemplate base = options[rng() % options.size()];

  Certificate cert = instantiate_base(base);
  Census census = base_census(base);

  // every surgery adds exactly two pieces
  const std::uint64_t budget = (max_faces - census.total_faces()) / 2;
  const std::uint64_t steps = budget == 0 ? 0 : rng() % (budget + 1);
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (rng() % 2 == 0) {
      cert = apply_f1b(cert);
      census = census.apply(step_delta(SurgeryStep::f1b()));
    } else {
      // any piece type present can host an F1a with m = k + 2
      std::vector<std::uint64_t> ks;
      ks.reserve(census.entries().size());
      for (const auto& [k, count] : census.entries()) ks.push_back(k);
      const std::uint64_t m = ks[rng() % ks.size()] + 2;
      cert = apply_f1a(cert, m);
      census = census.apply(step_delta(SurgeryStep::f1a(m)));
    }
  }
  return cert;
}

}  // namespace sd
