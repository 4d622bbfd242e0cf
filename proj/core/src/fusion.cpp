#include "g2dtg/fusion.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace g2dtg {
namespace {

BigInt ceil_div(const BigInt &a, const BigInt &b) { return -div_floor(-a, b); }

BigInt max_fused_length(const LengthGroup &g, const FusionConstraint &c) {
  const BigInt x(c.x_order());
  return (g.multiplicity < x ? g.multiplicity : x) * g.length;
}

std::vector<std::string> rows_in_table_order(const ConcreteTable &ct,
                                             const std::set<std::string> &ids) {
  std::vector<std::string> out;
  for (const auto &row : ct.rows)
    if (ids.contains(row.id))
      out.push_back(row.id);
  return out;
}

// All partitions of n into parts of size at most cap, largest part first.
void partitions(std::uint64_t n, std::uint64_t cap, std::vector<std::uint64_t> &prefix,
                std::vector<std::vector<std::uint64_t>> &out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t part = std::min(n, cap); part >= 1; --part) {
    prefix.push_back(part);
    partitions(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

FusionConstraint::FusionConstraint(std::uint64_t x_order) : x_order_(x_order) {
  if (x_order == 0)
    throw std::invalid_argument("|X| must be at least 1");
}

std::vector<LengthGroup> length_groups(const ConcreteTable &ct) {
  std::map<BigInt, LengthGroup> by_length;
  for (const auto &row : ct.rows) {
    if (row.trivial())
      continue;
    auto &g = by_length[row.length];
    g.length = row.length;
    g.multiplicity += row.count;
    g.row_ids.push_back(row.id);
  }
  std::vector<LengthGroup> out;
  out.reserve(by_length.size());
  for (auto &[len, g] : by_length)
    out.push_back(std::move(g));
  return out;
}

BigInt min_fused_classes(std::span<const LengthGroup> groups, const FusionConstraint &c) {
  const BigInt x(c.x_order());
  BigInt total;
  for (const auto &g : groups)
    total += ceil_div(g.multiplicity, x);
  return total;
}

Rational forced_diameter_bound(const CaseParameter &param, const FusionConstraint &c) {
  if (param.kind != FamilyKind::Ree)
    throw std::invalid_argument("the (q+6)/|X| diameter bound applies to the Ree family");
  return Rational(param.q + 6, BigInt(c.x_order()));
}

bool excludes_diameter_two(const ConcreteTable &ct, const FusionConstraint &) {
  return distinct_nontrivial_lengths(ct).size() >= 3;
}

std::vector<std::string> smallest_fused_candidates(const ConcreteTable &ct,
                                                   const FusionConstraint &c) {
  const auto groups = length_groups(ct);
  std::set<std::string> keep;
  for (const auto &row : ct.rows) {
    if (row.trivial())
      continue;
    bool dominated = false;
    for (const auto &g2 : groups) {
      if (max_fused_length(g2, c) >= row.length)
        continue;
      for (const auto &g1 : groups)
        if (max_fused_length(g1, c) < g2.length) {
          dominated = true;
          break;
        }
      if (dominated)
        break;
    }
    if (!dominated)
      keep.insert(row.id);
  }
  return rows_in_table_order(ct, keep);
}

std::vector<std::string> enumerate_fused_candidates(const ConcreteTable &ct,
                                                    const FusionConstraint &c,
                                                    std::uint64_t max_suborbits) {
  const auto groups = length_groups(ct);
  BigInt total;
  for (const auto &g : groups)
    total += g.multiplicity;
  if (total > BigInt(max_suborbits))
    throw std::length_error("too many suborbits for exhaustive fusion enumeration");

  // Per group, the distinct sets of fused part sizes.
  std::vector<std::vector<std::set<std::uint64_t>>> choices;
  for (const auto &g : groups) {
    std::vector<std::vector<std::uint64_t>> parts;
    std::vector<std::uint64_t> prefix;
    partitions(g.multiplicity.to_u64(), c.x_order(), prefix, parts);
    std::set<std::set<std::uint64_t>> distinct;
    for (const auto &p : parts)
      distinct.insert(std::set<std::uint64_t>(p.begin(), p.end()));
    choices.emplace_back(distinct.begin(), distinct.end());
  }

  std::set<std::size_t> hit_groups;
  std::vector<std::size_t> pick(groups.size(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t gi) {
    if (gi < groups.size()) {
      for (pick[gi] = 0; pick[gi] < choices[gi].size(); ++pick[gi])
        walk(gi + 1);
      return;
    }
    std::set<BigInt> lengths;
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (auto k : choices[i][pick[i]])
        lengths.insert(groups[i].length * BigInt(k));
    std::set<BigInt> smallest;
    for (const auto &l : lengths) {
      if (smallest.size() == 2)
        break;
      smallest.insert(l);
    }
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (auto k : choices[i][pick[i]])
        if (smallest.contains(groups[i].length * BigInt(k)))
          hit_groups.insert(i);
  };
  walk(0);

  std::set<std::string> keep;
  for (auto i : hit_groups)
    keep.insert(groups[i].row_ids.begin(), groups[i].row_ids.end());
  return rows_in_table_order(ct, keep);
}

} // namespace g2dtg
