#include "braidlab/reduced.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "braidlab/lie.hpp"
#include "braidlab/linalg.hpp"

namespace braidlab {

SquareFreeSeries sfs_one(uint32_t rank) {
  SquareFreeSeries s{rank, {}};
  s.terms[{}] = 1;
  return s;
}

namespace {

uint64_t index_mask(const std::vector<uint8_t>& key) {
  uint64_t m = 0;
  for (uint8_t i : key) m |= uint64_t(1) << i;
  return m;
}

}  // namespace

SquareFreeSeries sfs_mul(const SquareFreeSeries& a, const SquareFreeSeries& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  SquareFreeSeries r{a.rank, {}};
  for (auto& [u, cu] : a.terms) {
    uint64_t mu = index_mask(u);
    for (auto& [v, cv] : b.terms) {
      if (mu & index_mask(v)) continue;  // repeated index: monomial dies
      std::vector<uint8_t> w = u;
      w.insert(w.end(), v.begin(), v.end());
      int64_t& c = r.terms[w];
      c = checked_add(c, checked_mul(cu, cv));
      if (c == 0) r.terms.erase(w);
    }
  }
  return r;
}

void sfs_add_scaled(SquareFreeSeries& a, const SquareFreeSeries& b, int64_t c) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  for (auto& [w, cw] : b.terms) {
    int64_t& t = a.terms[w];
    t = checked_add(t, checked_mul(cw, c));
    if (t == 0) a.terms.erase(w);
  }
}

std::string sfs_str(const SquareFreeSeries& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [w, c] : s.terms) {
    if (!first) out << (c >= 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    int64_t ac = c < 0 ? -c : c;
    if (ac != 1 || w.empty()) out << ac;
    for (uint8_t i : w) out << "X" << unsigned(i);
  }
  return out.str();
}

SquareFreeSeries kn_embed(const Word& w, uint32_t rank) {
  if (w.max_generator() > rank)
    throw std::invalid_argument("word index exceeds rank");
  SquareFreeSeries r = sfs_one(rank);
  for (auto& [g, e] : w.syl) {
    SquareFreeSeries f = sfs_one(rank);
    f.terms[{uint8_t(g)}] = e < 0 ? -1 : 1;  // 1 +- X_g
    int64_t n = e < 0 ? -e : e;
    for (int64_t i = 0; i < n; i++) r = sfs_mul(r, f);
  }
  return r;
}

bool kn_equal(const Word& u, const Word& v, uint32_t rank) {
  return kn_embed(u, rank) == kn_embed(v, rank);
}

size_t kn_graded_rank(uint32_t n, uint32_t t) {
  if (t == 0 || t > n) return 0;
  if (t == 1) return n;

  // columns: for each t-subset i_1 < ... < i_t and each permutation tau of the
  // last t-1 entries, the left-normed bracket starting at x_{i_1}
  std::vector<std::vector<uint8_t>> keys;  // degree-t monomials, distinct indices
  std::map<std::vector<uint8_t>, size_t> key_index;
  std::vector<std::vector<int64_t>> cols;

  std::vector<uint32_t> subset;
  auto process_subset = [&](const std::vector<uint32_t>& sub) {
    std::vector<uint32_t> rest(sub.begin() + 1, sub.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<uint32_t> gens{sub[0]};
      gens.insert(gens.end(), rest.begin(), rest.end());
      Word bracket = left_normed_commutator(gens);
      SquareFreeSeries s = kn_embed(bracket, n);
      std::vector<std::pair<std::vector<uint8_t>, int64_t>> entries;
      for (auto& [key, c] : s.terms) {
        if (key.size() != t) continue;
        entries.push_back({key, c});
      }
      cols.push_back({});
      auto& stored = cols.back();
      for (auto& [key, c] : entries) {
        auto it = key_index.find(key);
        size_t idx;
        if (it == key_index.end()) {
          idx = keys.size();
          key_index[key] = idx;
          keys.push_back(key);
        } else {
          idx = it->second;
        }
        if (stored.size() <= idx) stored.resize(idx + 1, 0);
        stored[idx] = c;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  // enumerate t-subsets of 1..n
  std::vector<uint32_t> idx(t);
  for (uint32_t i = 0; i < t; i++) idx[i] = i + 1;
  while (true) {
    process_subset(idx);
    int32_t pos = int32_t(t) - 1;
    while (pos >= 0 && idx[pos] == n - (t - 1 - uint32_t(pos))) pos--;
    if (pos < 0) break;
    idx[pos]++;
    for (uint32_t j = uint32_t(pos) + 1; j < t; j++) idx[j] = idx[j - 1] + 1;
  }

  IntMat m(keys.size(), cols.size());
  for (size_t j = 0; j < cols.size(); j++)
    for (size_t i = 0; i < cols[j].size(); i++) m.at(i, j) = cols[j][i];
  return rank_z(std::move(m));
}

SquareFreeSeries reduced_braid_action(const BraidWord& b, const Word& w) {
  return kn_embed(artin_action(b).apply(w), b.strands);
}

Word kn_relation_word(uint32_t i, const Word& g) {
  Word xi = word_gen(i);
  return commutator(xi, word_mul(word_mul(g, xi), word_inv(g)));
}

}  // namespace braidlab
