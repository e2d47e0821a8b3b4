#include "codealg/codes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace codealg {

std::string word_str(word w, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (get_bit(w, i)) s[i] = '1';
  return s;
}

word word_from_str(const std::string& s) {
  if (s.empty() || s.size() > 64)
    throw Error(errc::parse_error, "bit string length must be 1..64: '" + s + "'");
  word w = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      w |= word(1) << i;
    else if (s[i] != '0')
      throw Error(errc::parse_error, "invalid character '" + std::string(1, s[i]) +
                                         "' in bit string '" + s + "'");
  }
  return w;
}

bool lex_less(word a, word b) {
  word x = a ^ b;
  if (!x) return false;
  word low = x & (~x + 1);
  return (b & low) != 0;  // b has the 1 at the first differing coordinate
}

word apply_perm(word w, const Perm& p) {
  word out = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (get_bit(w, int(i))) out |= word(1) << p[i];
  return out;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = int(i);
  return q;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm q(a.size());
  for (size_t i = 0; i < a.size(); ++i) q[i] = b[a[i]];
  return q;
}

word LinearCode::reduce(word w) const {
  // rows are fully reduced with unique pivots (lowest set bit), sorted by
  // pivot, so one ascending pass suffices
  for (word g : echelon_) {
    word low = g & (~g + 1);
    if (w & low) w ^= g;
  }
  return w;
}

namespace {

// xor-basis elimination keyed by lowest set bit; returns the fully reduced
// remainder and, when tracking is on, the combination of input rows used
word xor_reduce(const std::vector<word>& basis, const std::vector<word>& combos, word v,
                word* combo) {
  bool progress = true;
  while (v && progress) {
    progress = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      word low = basis[i] & (~basis[i] + 1);
      if (v & low) {
        v ^= basis[i];
        if (combo) *combo ^= combos[i];
        progress = true;
      }
    }
  }
  return v;
}

}  // namespace

LinearCode LinearCode::from_generators(const std::vector<std::string>& rows) {
  if (rows.empty()) throw Error(errc::length_mismatch, "no generator rows given");
  int n = int(rows[0].size());
  std::vector<word> ws;
  for (const auto& r : rows) {
    if (int(r.size()) != n)
      throw Error(errc::length_mismatch, "row '" + r + "' has length " +
                                             std::to_string(r.size()) + ", expected " +
                                             std::to_string(n));
    ws.push_back(word_from_str(r));
  }
  // echelonize, tracking which original rows combine into each basis row
  std::vector<word> basis, combo;
  for (size_t r = 0; r < ws.size(); ++r) {
    word c = word(1) << r;
    word v = xor_reduce(basis, combo, ws[r], &c);
    if (v == 0) {
      std::string dep;
      for (size_t i = 0; i < ws.size(); ++i)
        if (get_bit(c, int(i))) dep += (dep.empty() ? "" : " + ") + std::string("row ") +
                                       std::to_string(i + 1);
      if (ws[r] == 0) dep = "row " + std::to_string(r + 1) + " is zero";
      throw Error(errc::dependent_rows, "dependent generators: " + dep + " = 0");
    }
    basis.push_back(v);
    combo.push_back(c);
  }
  return from_basis(n, ws);
}

LinearCode LinearCode::from_basis(int n, std::vector<word> gens) {
  if (n < 1 || n > 64) throw Error(errc::too_large, "code length must be 1..64");
  LinearCode C;
  C.n_ = n;
  for (word g : gens) {
    word v = xor_reduce(C.echelon_, {}, g, nullptr);
    if (v == 0) throw Error(errc::dependent_rows, "dependent generator rows");
    // keep the basis fully reduced
    word low = v & (~v + 1);
    for (auto& b : C.echelon_)
      if (b & low) b ^= v;
    C.echelon_.push_back(v);
  }
  std::sort(C.echelon_.begin(), C.echelon_.end(), [](word a, word b) {
    return __builtin_ctzll(a) < __builtin_ctzll(b);
  });
  C.gens_ = C.echelon_;
  if (C.dim() <= 20) C.enumerate();
  return C;
}

LinearCode LinearCode::full_space(int n) {
  std::vector<word> gens;
  for (int i = 0; i < n; ++i) gens.push_back(word(1) << i);
  return from_basis(n, gens);
}

void LinearCode::enumerate() {
  words_.clear();
  words_.reserve(size());
  size_t k = gens_.size();
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    word w = 0;
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) w ^= gens_[i];
    words_.push_back(w);
  }
  std::sort(words_.begin(), words_.end(), [](word a, word b) { return lex_less(a, b); });
}

const std::vector<word>& LinearCode::words() const {
  if (!enumerated() && dim() > 0)
    throw Error(errc::too_large, "word enumeration requires dimension <= 20");
  if (words_.empty()) {
    static const std::vector<word> zero{0};
    return zero;
  }
  return words_;
}

std::vector<word> LinearCode::nonconstant_words() const {
  std::vector<word> out;
  for (word w : words())
    if (w != 0 && w != all_ones()) out.push_back(w);
  return out;
}

bool LinearCode::contains(word w) const { return reduce(w) == 0; }

bool LinearCode::is_subcode_of(const LinearCode& C) const {
  if (n_ != C.n_) return false;
  for (word g : gens_)
    if (!C.contains(g)) return false;
  return true;
}

word LinearCode::support() const {
  word s = 0;
  for (word g : gens_) s |= g;
  return s;
}

bool LinearCode::operator==(const LinearCode& o) const {
  if (n_ != o.n_ || dim() != o.dim()) return false;
  for (word g : gens_)
    if (!o.contains(g)) return false;
  return true;
}

std::pair<std::vector<word>, std::vector<word>> split_by_dot(const LinearCode& C, word v) {
  std::vector<word> c0, c1;
  for (word w : C.words()) (dot2(w, v) ? c1 : c0).push_back(w);
  return {c0, c1};
}

LinearCode dual_code(const LinearCode& C) {
  int n = C.length();
  // nullspace of the generator matrix over F2
  std::vector<word> rows = C.generators();
  std::vector<int> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  // forward eliminate on explicit column order 0..n-1
  std::vector<word> ech;
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (size_t i = 0; i < rows.size(); ++i)
      if (get_bit(rows[i], col)) {
        pr = int(i);
        break;
      }
    if (pr < 0) continue;
    word prow = rows[pr];
    rows.erase(rows.begin() + pr);
    for (auto& r : rows)
      if (get_bit(r, col)) r ^= prow;
    for (auto& r : ech)
      if (get_bit(r, col)) r ^= prow;
    ech.push_back(prow);
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
  }
  std::vector<word> dual_gens;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    word v = word(1) << f;
    for (size_t r = 0; r < ech.size(); ++r)
      if (get_bit(ech[r], f)) v |= word(1) << pivot_of_row[r];
    dual_gens.push_back(v);
  }
  return LinearCode::from_basis(n, dual_gens);
}

ConstantWeight is_constant_weight(const LinearCode& C) {
  auto cstar = C.nonconstant_words();
  if (cstar.empty()) throw Error(errc::empty_cstar, "C* is empty");
  int w = weight(cstar[0]);
  for (word a : cstar)
    if (weight(a) != w) return {false, 0};
  return {true, w};
}

bool is_projective(const LinearCode& C) {
  LinearCode D = dual_code(C);
  if (D.dim() <= 20) {
    for (word w : D.words())
      if (w != 0 && weight(w) <= 2) return false;
    return true;
  }
  // equivalent column test: some zero column or two equal columns of the
  // generator matrix give a dual word of weight 1 or 2
  int n = C.length();
  std::vector<word> cols(n, 0);
  const auto& gens = C.generators();
  for (size_t r = 0; r < gens.size(); ++r)
    for (int i = 0; i < n; ++i)
      if (get_bit(gens[r], i)) cols[i] |= word(1) << r;
  for (int i = 0; i < n; ++i) {
    if (cols[i] == 0) return false;
    for (int j = i + 1; j < n; ++j)
      if (cols[i] == cols[j]) return false;
  }
  return true;
}

ConstWeightClass classify_constant_weight(const LinearCode& C) {
  auto cw = is_constant_weight(C);
  if (!cw.constant) throw Error(errc::not_constant_weight, "code is not constant weight");
  int w = cw.weight, k = C.dim();
  int n_eff = weight(C.support());
  ConstWeightClass cls{};
  if (C.has_all_ones()) {
    cls.kind = ConstWeightClass::ReedMullerJuxtaposition;
    cls.r = k - 1;
  } else {
    cls.kind = ConstWeightClass::SimplexJuxtaposition;
    cls.r = k;
  }
  long half = 1L << (cls.r - 1);
  if (cls.r < 1 || w % half != 0)
    throw Error(errc::internal, "constant-weight parameters do not match a juxtaposition");
  cls.m = int(w / half);
  long expect = cls.kind == ConstWeightClass::SimplexJuxtaposition
                    ? long(cls.m) * ((1L << cls.r) - 1)
                    : long(cls.m) * (1L << cls.r);
  if (expect != n_eff)
    throw Error(errc::internal, "constant-weight support does not match a juxtaposition");
  return cls;
}

LinearCode juxtaposition_code(ConstWeightClass cls) {
  int r = cls.r, m = cls.m;
  int block = cls.kind == ConstWeightClass::SimplexJuxtaposition ? (1 << r) - 1 : (1 << r);
  int rows = cls.kind == ConstWeightClass::SimplexJuxtaposition ? r : r + 1;
  int n = m * block;
  std::vector<std::string> gens(rows, std::string(n, '0'));
  for (int copy = 0; copy < m; ++copy) {
    for (int c = 0; c < block; ++c) {
      int col = copy * block + c;
      // simplex: columns are the nonzero vectors of F2^r; RM(1,r): all vectors
      // plus the all-ones row
      int v = cls.kind == ConstWeightClass::SimplexJuxtaposition ? c + 1 : c;
      for (int b = 0; b < r; ++b)
        if ((v >> b) & 1) gens[b][col] = '1';
      if (cls.kind == ConstWeightClass::ReedMullerJuxtaposition) gens[r][col] = '1';
    }
  }
  return LinearCode::from_generators(gens);
}

std::vector<int> weight_enumerator(const LinearCode& C) {
  std::vector<int> we(C.length() + 1, 0);
  for (word w : C.words()) ++we[weight(w)];
  return we;
}

namespace {

struct AutSearch {
  const std::vector<word>& words;
  int n;
  std::vector<std::vector<int>> col_profile;  // per column, weight counts
  std::vector<int> img;
  std::vector<bool> used;
  std::vector<Perm> out;
  const std::vector<word>& gens;
  const LinearCode& C;

  AutSearch(const LinearCode& c, const std::vector<word>& ws)
      : words(ws), n(c.length()), img(n, -1), used(n, false), gens(c.generators()), C(c) {
    col_profile.assign(n, std::vector<int>(n + 1, 0));
    for (word w : words) {
      int wt = weight(w);
      for (int i = 0; i < n; ++i)
        if (get_bit(w, i)) ++col_profile[i][wt];
    }
  }

  bool projections_match(int depth) const {
    // multiset of codeword patterns on coordinates 0..depth must equal the
    // multiset on img[0..depth] (read in the same order)
    std::vector<word> a, b;
    a.reserve(words.size());
    b.reserve(words.size());
    for (word w : words) {
      word pa = 0, pb = 0;
      for (int t = 0; t <= depth; ++t) {
        if (get_bit(w, t)) pa |= word(1) << t;
        if (get_bit(w, img[t])) pb |= word(1) << t;
      }
      a.push_back(pa);
      b.push_back(pb);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  void rec(int depth) {
    if (depth == n) {
      Perm p(img.begin(), img.end());
      for (word g : gens)
        if (!C.contains(apply_perm(g, p))) return;
      out.push_back(std::move(p));
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || col_profile[depth] != col_profile[j]) continue;
      img[depth] = j;
      used[j] = true;
      if (projections_match(depth)) rec(depth + 1);
      used[j] = false;
      img[depth] = -1;
    }
  }
};

}  // namespace

std::vector<Perm> automorphism_group(const LinearCode& C, int max_n) {
  if (C.length() > max_n)
    throw Error(errc::too_large, "automorphism search limited to n <= " + std::to_string(max_n));
  AutSearch s(C, C.words());
  s.rec(0);
  return std::move(s.out);
}

std::vector<word> coset_reps(const LinearCode& D) {
  LinearCode W = dual_code(D);
  int n = D.length();
  // pivots of the dual's echelon basis; representatives are supported on the
  // free coordinates, one per coset, 2^dim(D) in total
  std::vector<bool> is_pivot(n, false);
  for (word g : W.generators()) {
    word low = g & (~g + 1);
    is_pivot[__builtin_ctzll(low)] = true;
  }
  std::vector<int> free_coords;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[i]) free_coords.push_back(i);
  if (free_coords.size() > 20)
    throw Error(errc::too_large, "too many cosets to enumerate");
  std::vector<word> reps;
  for (size_t mask = 0; mask < (size_t(1) << free_coords.size()); ++mask) {
    word v = 0;
    for (size_t i = 0; i < free_coords.size(); ++i)
      if ((mask >> i) & 1) v |= word(1) << free_coords[i];
    reps.push_back(v);
  }
  std::sort(reps.begin(), reps.end(), [](word a, word b) { return lex_less(a, b); });
  return reps;
}

}  // namespace codealg
