#include "althecke/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace althecke {

Multipartition::Multipartition(std::vector<Partition> comps) : components(std::move(comps)) {
  for (auto& p : components)
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int Multipartition::size() const {
  int s = 0;
  for (const auto& p : components) s += std::accumulate(p.begin(), p.end(), 0);
  return s;
}

bool Multipartition::valid() const {
  for (const auto& p : components) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] <= 0) return false;
      if (i > 0 && p[i] > p[i - 1]) return false;
    }
  }
  return true;
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c) os << "|";
    if (components[c].empty()) os << "-";
    for (std::size_t i = 0; i < components[c].size(); ++i)
      os << (i ? "," : "") << components[c][i];
  }
  os << ")";
  return os.str();
}

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (int j = 1; j <= p.front(); ++j)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; })));
  return out;
}

Multipartition conjugate(const Multipartition& mp) {
  std::vector<Partition> comps;
  for (auto it = mp.components.rbegin(); it != mp.components.rend(); ++it)
    comps.push_back(conjugate(*it));
  return Multipartition(std::move(comps));
}

Multipartition parse_multipartition(const std::string& text, int level) {
  std::vector<Partition> comps;
  std::string part;
  std::stringstream ss(text);
  while (std::getline(ss, part, '|')) {
    Partition p;
    std::stringstream ps(part);
    std::string num;
    while (std::getline(ps, num, ',')) {
      if (num.empty() || num == "-") continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(num, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad part '" + num + "' in multipartition '" + text + "'");
      }
      if (used != num.size() || v <= 0)
        throw std::invalid_argument("bad part '" + num + "' in multipartition '" + text + "'");
      p.push_back(v);
    }
    comps.push_back(std::move(p));
  }
  if (!text.empty() && text.back() == '|') comps.emplace_back();
  if (text.empty()) comps.emplace_back();
  if (static_cast<int>(comps.size()) != level)
    throw std::invalid_argument("multipartition '" + text + "' does not have " +
                                std::to_string(level) + " components");
  Multipartition mp(std::move(comps));
  if (!mp.valid()) throw std::invalid_argument("'" + text + "' is not a multipartition");
  return mp;
}

// ---------------------------------------------------------------------------

bool StdTableau::is_standard(const Multipartition& shape, const std::vector<Box>& positions) {
  if (static_cast<int>(positions.size()) != shape.size()) return false;
  std::vector<std::vector<std::vector<int>>> grid(shape.components.size());
  for (std::size_t c = 0; c < shape.components.size(); ++c)
    for (int len : shape.components[c]) grid[c].emplace_back(len, 0);
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const Box& b = positions[k];
    if (b.comp < 0 || b.comp >= shape.level()) return false;
    if (b.row < 0 || b.row >= static_cast<int>(grid[b.comp].size())) return false;
    if (b.col < 0 || b.col >= static_cast<int>(grid[b.comp][b.row].size())) return false;
    if (grid[b.comp][b.row][b.col] != 0) return false;
    grid[b.comp][b.row][b.col] = static_cast<int>(k) + 1;
  }
  for (const auto& comp : grid)
    for (std::size_t r = 0; r < comp.size(); ++r)
      for (std::size_t c = 0; c < comp[r].size(); ++c) {
        if (c > 0 && comp[r][c] <= comp[r][c - 1]) return false;
        if (r > 0 && comp[r][c] <= comp[r - 1][c]) return false;
      }
  return true;
}

StdTableau::StdTableau(Multipartition shape, std::vector<Box> positions)
    : shape_(std::move(shape)), pos_(std::move(positions)) {
  if (!is_standard(shape_, pos_))
    throw std::invalid_argument("filling is not a standard tableau of shape " + shape_.to_string());
}

int StdTableau::entry(int comp, int row, int col) const {
  for (std::size_t k = 0; k < pos_.size(); ++k)
    if (pos_[k] == Box{comp, row, col}) return static_cast<int>(k) + 1;
  throw std::out_of_range("no such box in tableau");
}

std::vector<std::vector<std::vector<int>>> StdTableau::rows() const {
  std::vector<std::vector<std::vector<int>>> grid(shape_.components.size());
  for (std::size_t c = 0; c < shape_.components.size(); ++c)
    for (int len : shape_.components[c]) grid[c].emplace_back(len, 0);
  for (std::size_t k = 0; k < pos_.size(); ++k)
    grid[pos_[k].comp][pos_[k].row][pos_[k].col] = static_cast<int>(k) + 1;
  return grid;
}

std::vector<int> StdTableau::reading_word() const {
  std::vector<int> word;
  word.reserve(pos_.size());
  for (const auto& comp : rows())
    for (const auto& row : comp) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string StdTableau::to_string() const {
  std::ostringstream os;
  const auto grid = rows();
  for (std::size_t c = 0; c < grid.size(); ++c) {
    if (c) os << " | ";
    if (grid[c].empty()) os << "-";
    for (std::size_t r = 0; r < grid[c].size(); ++r) {
      if (r) os << "/";
      for (std::size_t j = 0; j < grid[c][r].size(); ++j) os << (j ? "," : "") << grid[c][r][j];
    }
  }
  return os.str();
}

StdTableau conjugate(const StdTableau& t) {
  const int level = t.shape().level();
  std::vector<Box> pos;
  pos.reserve(t.positions().size());
  for (const Box& b : t.positions()) pos.push_back(Box{level - 1 - b.comp, b.col, b.row});
  return StdTableau(conjugate(t.shape()), std::move(pos));
}

std::optional<StdTableau> apply_transposition(const StdTableau& t, int r) {
  if (r < 1 || r >= t.n()) throw std::out_of_range("apply_transposition: r out of range");
  std::vector<Box> pos = t.positions();
  std::swap(pos[r - 1], pos[r]);
  if (!StdTableau::is_standard(t.shape(), pos)) return std::nullopt;
  return StdTableau(t.shape(), std::move(pos));
}

// ---------------------------------------------------------------------------

namespace {

// Partitions of m with parts <= max_part, in decreasing lexicographic order.
void partitions_rec(int m, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(m, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(m - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(m, m, cur, out);
  return out;
}

void multipartitions_rec(int remaining, int comps_left, std::vector<Partition>& cur,
                         std::vector<Multipartition>& out) {
  if (comps_left == 1) {
    for (auto& p : partitions_of(remaining)) {
      cur.push_back(p);
      out.emplace_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int m = remaining; m >= 0; --m) {
    for (auto& p : partitions_of(m)) {
      cur.push_back(p);
      multipartitions_rec(remaining - m, comps_left - 1, cur, out);
      cur.pop_back();
    }
  }
}

void tableaux_rec(const Multipartition& shape, std::vector<std::vector<int>>& filled, int k,
                  std::vector<Box>& pos, std::vector<StdTableau>& out) {
  const int n = shape.size();
  if (k > n) {
    out.emplace_back(shape, pos);
    return;
  }
  // k goes into an addable box of the partially filled diagram.
  for (std::size_t c = 0; c < shape.components.size(); ++c) {
    const auto& comp = shape.components[c];
    for (std::size_t r = 0; r < comp.size(); ++r) {
      const int col = filled[c][r];
      if (col >= comp[r]) continue;
      if (r > 0 && filled[c][r - 1] <= col) continue;
      ++filled[c][r];
      pos.push_back(Box{static_cast<int>(c), static_cast<int>(r), col});
      tableaux_rec(shape, filled, k + 1, pos, out);
      pos.pop_back();
      --filled[c][r];
    }
  }
}

}  // namespace

std::vector<Multipartition> enum_multipartitions(int n, int level) {
  if (n < 0 || level < 1) throw std::invalid_argument("enum_multipartitions: need n >= 0, level >= 1");
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  multipartitions_rec(n, level, cur, out);
  return out;
}

std::vector<StdTableau> enum_std_tableaux(const Multipartition& lambda) {
  if (!lambda.valid()) throw std::invalid_argument("enum_std_tableaux: invalid shape");
  std::vector<std::vector<int>> filled(lambda.components.size());
  for (std::size_t c = 0; c < lambda.components.size(); ++c)
    filled[c].assign(lambda.components[c].size(), 0);
  std::vector<Box> pos;
  std::vector<StdTableau> out;
  tableaux_rec(lambda, filled, 1, pos, out);
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(out[i].reading_word(), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<StdTableau> sorted;
  sorted.reserve(out.size());
  for (auto& [w, i] : keyed) sorted.push_back(std::move(out[i]));
  return sorted;
}

StdTableau initial_tableau(const Multipartition& lambda) {
  std::vector<Box> pos;
  for (std::size_t c = 0; c < lambda.components.size(); ++c)
    for (std::size_t r = 0; r < lambda.components[c].size(); ++r)
      for (int j = 0; j < lambda.components[c][r]; ++j)
        pos.push_back(Box{static_cast<int>(c), static_cast<int>(r), j});
  return StdTableau(lambda, std::move(pos));
}

StdTableau final_tableau(const Multipartition& lambda) {
  std::vector<Box> pos;
  for (int c = lambda.level() - 1; c >= 0; --c) {
    const Partition cols = conjugate(lambda.components[c]);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int r = 0; r < cols[j]; ++r) pos.push_back(Box{c, r, static_cast<int>(j)});
  }
  return StdTableau(lambda, std::move(pos));
}

bool dominates(const Multipartition& a, const Multipartition& b) {
  if (a.level() != b.level() || a.size() != b.size())
    throw std::invalid_argument("dominates: multipartitions of different size or level");
  int base_a = 0;
  int base_b = 0;
  for (int r = 0; r < a.level(); ++r) {
    const auto& pa = a.components[r];
    const auto& pb = b.components[r];
    const std::size_t rows = std::max(pa.size(), pb.size());
    int sa = base_a;
    int sb = base_b;
    if (sa < sb) return false;
    for (std::size_t i = 0; i < rows; ++i) {
      sa += i < pa.size() ? pa[i] : 0;
      sb += i < pb.size() ? pb[i] : 0;
      if (sa < sb) return false;
    }
    base_a = sa;
    base_b = sb;
  }
  return true;
}

Multipartition restricted_shape(const StdTableau& t, int m) {
  std::vector<Partition> comps(t.shape().components.size());
  for (int k = 1; k <= m; ++k) {
    const Box& b = t.box(k);
    auto& p = comps[b.comp];
    if (static_cast<int>(p.size()) <= b.row) p.resize(b.row + 1, 0);
    ++p[b.row];
  }
  return Multipartition(std::move(comps));
}

bool dominates(const StdTableau& s, const StdTableau& t) {
  if (s.n() != t.n() || s.shape().level() != t.shape().level())
    throw std::invalid_argument("dominates: tableaux of different size or level");
  for (int m = 1; m <= s.n(); ++m)
    if (!dominates(restricted_shape(s, m), restricted_shape(t, m))) return false;
  return true;
}

int content(const StdTableau& t, int k, const std::vector<int>& kappa) {
  if (k < 1 || k > t.n()) throw std::out_of_range("content: k out of range");
  const Box& b = t.box(k);
  return kappa.at(b.comp) + b.col - b.row;
}

std::vector<int> content_seq(const StdTableau& t, const std::vector<int>& kappa) {
  std::vector<int> c(t.n());
  for (int k = 1; k <= t.n(); ++k) c[k - 1] = content(t, k, kappa);
  return c;
}

std::vector<int> residue_seq(const StdTableau& t, const AlgebraParams& params) {
  auto c = content_seq(t, params.kappa);
  for (auto& x : c) x = params.residue(x);
  return c;
}

int axial_distance(const StdTableau& t, int r, const std::vector<int>& kappa) {
  if (r < 1 || r >= t.n()) throw std::out_of_range("axial_distance: r out of range");
  return content(t, r, kappa) - content(t, r + 1, kappa);
}

ResidueSeq negate(const ResidueSeq& i, const AlgebraParams& params) {
  ResidueSeq out(i.size());
  std::transform(i.begin(), i.end(), out.begin(), [&](int x) { return params.neg_residue(x); });
  return out;
}

std::vector<ResidueClass> residue_classes_of(const std::vector<ResidueSeq>& seqs,
                                             const AlgebraParams& params) {
  std::set<ResidueSeq> seen;
  std::vector<ResidueClass> out;
  std::set<ResidueSeq> all(seqs.begin(), seqs.end());
  for (const auto& s : seqs) all.insert(negate(s, params));
  for (const auto& s : all) {
    if (seen.count(s)) continue;
    ResidueSeq m = negate(s, params);
    seen.insert(s);
    seen.insert(m);
    out.push_back(ResidueClass{std::min(s, m), std::max(s, m)});
  }
  return out;
}

std::vector<ResidueClass> residue_classes(int n, const AlgebraParams& params) {
  if (!params.e) throw std::invalid_argument("residue_classes: I^n is infinite when e is infinite");
  const int e = *params.e;
  std::vector<ResidueSeq> all;
  ResidueSeq cur(n, 0);
  while (true) {
    all.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == e - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return residue_classes_of(all, params);
}

std::vector<ShapeClass> mp_classes(const std::vector<Multipartition>& shapes) {
  std::vector<ShapeClass> out;
  std::vector<bool> done(shapes.size(), false);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    if (done[i]) continue;
    const Multipartition c = conjugate(shapes[i]);
    const auto it = std::find(shapes.begin(), shapes.end(), c);
    if (it == shapes.end()) throw std::invalid_argument("mp_classes: list not closed under conjugation");
    const auto j = static_cast<std::size_t>(it - shapes.begin());
    done[i] = done[j] = true;
    out.push_back(ShapeClass{std::min(i, j), std::max(i, j)});
  }
  return out;
}

std::vector<StdTableau> std_plus(const Multipartition& lambda) {
  if (conjugate(lambda) != lambda) throw DomainError("std_plus: shape is not self-conjugate");
  std::vector<StdTableau> out;
  for (const auto& t : enum_std_tableaux(lambda)) {
    const StdTableau tc = conjugate(t);
    if (tc == t) throw DomainError("std_plus: tableau " + t.to_string() + " equals its conjugate");
    if (t.reading_word() < tc.reading_word()) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------

TableauCatalog::TableauCatalog(int n, int level) : n_(n), level_(level) {
  shapes_ = enum_multipartitions(n, level);
  tabs_.reserve(shapes_.size());
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    tabs_.push_back(enum_std_tableaux(shapes_[s]));
    total_ += tabs_[s].size();
  }
  conj_shape_.resize(shapes_.size());
  for (std::size_t s = 0; s < shapes_.size(); ++s) conj_shape_[s] = *find_shape(althecke::conjugate(shapes_[s]));

  swap_.resize(shapes_.size());
  conj_.resize(shapes_.size());
  for (std::size_t s = 0; s < shapes_.size(); ++s) {
    swap_[s].resize(tabs_[s].size());
    conj_[s].resize(tabs_[s].size());
    for (std::size_t i = 0; i < tabs_[s].size(); ++i) {
      const StdTableau& t = tabs_[s][i];
      swap_[s][i].resize(n > 0 ? n - 1 : 0);
      for (int r = 1; r < n; ++r) {
        if (auto u = apply_transposition(t, r)) swap_[s][i][r - 1] = find(*u);
      }
      conj_[s][i] = *find(althecke::conjugate(t));
    }
  }
}

std::optional<std::size_t> TableauCatalog::find_shape(const Multipartition& mp) const {
  const auto it = std::find(shapes_.begin(), shapes_.end(), mp);
  if (it == shapes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - shapes_.begin());
}

std::optional<TabRef> TableauCatalog::find(const StdTableau& t) const {
  const auto shape = find_shape(t.shape());
  if (!shape) return std::nullopt;
  const auto& list = tabs_[*shape];
  const auto word = t.reading_word();
  const auto it = std::lower_bound(list.begin(), list.end(), word, [](const StdTableau& a, const std::vector<int>& w) {
    return a.reading_word() < w;
  });
  if (it == list.end() || !(*it == t)) return std::nullopt;
  return TabRef{*shape, static_cast<std::size_t>(it - list.begin())};
}

std::optional<TabRef> TableauCatalog::swap(TabRef t, int r) const {
  if (r < 1 || r >= n_) throw std::out_of_range("TableauCatalog::swap: r out of range");
  return swap_[t.shape][t.index][r - 1];
}

TabRef TableauCatalog::conjugate(TabRef t) const { return conj_[t.shape][t.index]; }

std::vector<TabRef> TableauCatalog::all() const {
  std::vector<TabRef> out;
  out.reserve(total_);
  for (std::size_t s = 0; s < tabs_.size(); ++s)
    for (std::size_t i = 0; i < tabs_[s].size(); ++i) out.push_back(TabRef{s, i});
  return out;
}

}  // namespace althecke
