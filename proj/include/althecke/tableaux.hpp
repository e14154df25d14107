#pragma once

// Multipartitions, standard multitableaux and the combinatorics built on them:
// dominance, conjugation, contents/residues and the +/- class structures.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "althecke/scalars.hpp"

namespace althecke {

using Partition = std::vector<int>;

struct Multipartition {
  std::vector<Partition> components;

  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> comps);

  int level() const { return static_cast<int>(components.size()); }
  int size() const;
  /// Components with trailing zeros stripped and weakly decreasing, positive parts.
  bool valid() const;
  std::string to_string() const;

  auto operator<=>(const Multipartition&) const = default;
  bool operator==(const Multipartition&) const = default;
};

/// Conjugate partition (transpose of the Young diagram).
Partition conjugate(const Partition& p);
/// (lambda^(1), ..., lambda^(l))' = (lambda^(l)', ..., lambda^(1)').
Multipartition conjugate(const Multipartition& mp);

/// Parses "2,1|1|" style text: components separated by '|', parts by ','.
/// An empty component is the empty string. Throws std::invalid_argument.
Multipartition parse_multipartition(const std::string& text, int level);

/// Position of a box: component, row and column (all 0-based).
struct Box {
  int comp = 0;
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

/// A standard multitableau, stored as the box holding each entry 1..n.
class StdTableau {
 public:
  StdTableau() = default;
  /// positions[k-1] is the box holding k. Throws if the filling is not a
  /// standard tableau of `shape`.
  StdTableau(Multipartition shape, std::vector<Box> positions);

  const Multipartition& shape() const { return shape_; }
  int n() const { return static_cast<int>(pos_.size()); }
  const Box& box(int k) const { return pos_[k - 1]; }
  const std::vector<Box>& positions() const { return pos_; }

  /// Entry at (comp, row, col).
  int entry(int comp, int row, int col) const;
  /// Ragged per-component entry matrices.
  std::vector<std::vector<std::vector<int>>> rows() const;
  /// Entries read along rows, component by component.
  std::vector<int> reading_word() const;
  std::string to_string() const;

  bool operator==(const StdTableau& o) const { return shape_ == o.shape_ && pos_ == o.pos_; }

  /// Checks the row/column increase condition for a filling.
  static bool is_standard(const Multipartition& shape, const std::vector<Box>& positions);

 private:
  Multipartition shape_;
  std::vector<Box> pos_;
};

StdTableau conjugate(const StdTableau& t);

/// s_r . t: swaps r and r+1; nullopt when the result is not standard.
std::optional<StdTableau> apply_transposition(const StdTableau& t, int r);

/// All l-multipartitions of n. Decreasing lexicographic order of the key
/// (|lambda^(1)|, lambda^(1), |lambda^(2)|, lambda^(2), ...), so (n|0|...|0) comes
/// first and (0|...|0|1^n) last.
std::vector<Multipartition> enum_multipartitions(int n, int level);

/// All standard tableaux of shape lambda ordered by increasing reading word;
/// the first is the initial tableau and the last the final tableau.
std::vector<StdTableau> enum_std_tableaux(const Multipartition& lambda);

/// 1..n along rows starting from the first component.
StdTableau initial_tableau(const Multipartition& lambda);
/// 1..n down columns starting from the last component.
StdTableau final_tableau(const Multipartition& lambda);

/// Dominance order on multipartitions of the same size and level.
bool dominates(const Multipartition& a, const Multipartition& b);
/// s dominates t iff shape(s restricted to 1..m) dominates shape(t restricted
/// to 1..m) for every m.
bool dominates(const StdTableau& s, const StdTableau& t);

/// Shape of t restricted to the entries 1..m.
Multipartition restricted_shape(const StdTableau& t, int m);

/// c_t(k) = kappa_l + col - row.
int content(const StdTableau& t, int k, const std::vector<int>& kappa);
std::vector<int> content_seq(const StdTableau& t, const std::vector<int>& kappa);
/// Contents reduced mod e (left untouched when e is infinite).
std::vector<int> residue_seq(const StdTableau& t, const AlgebraParams& params);
/// rho_r(t) = c_r(t) - c_{r+1}(t).
int axial_distance(const StdTableau& t, int r, const std::vector<int>& kappa);

using ResidueSeq = std::vector<int>;

/// -i entrywise in I = Z/eZ.
ResidueSeq negate(const ResidueSeq& i, const AlgebraParams& params);

/// An orbit {i, -i} of the negation involution, with its representative.
struct ResidueClass {
  ResidueSeq plus;   // lexicographically smaller member
  ResidueSeq minus;  // equal to plus for a class of size 1
  std::size_t size() const { return plus == minus ? 1 : 2; }
};

/// Classes of all of I^n for finite e (e^n sequences).
std::vector<ResidueClass> residue_classes(int n, const AlgebraParams& params);
/// Classes of a given collection of sequences (closed under negation first).
std::vector<ResidueClass> residue_classes_of(const std::vector<ResidueSeq>& seqs,
                                             const AlgebraParams& params);

/// An orbit {lambda, lambda'} given by indices into the enumeration list.
struct ShapeClass {
  std::size_t plus = 0;   // earlier in enumeration order
  std::size_t minus = 0;  // equal to plus when lambda = lambda'
  bool self_conjugate() const { return plus == minus; }
};

std::vector<ShapeClass> mp_classes(const std::vector<Multipartition>& shapes);

/// One tableau out of each pair {t, t'} (the smaller reading word) for a
/// self-conjugate shape. Throws DomainError if the shape is not
/// self-conjugate or some t equals t'.
std::vector<StdTableau> std_plus(const Multipartition& lambda);

/// Reference to a tableau inside a TableauCatalog.
struct TabRef {
  std::size_t shape = 0;
  std::size_t index = 0;
  auto operator<=>(const TabRef&) const = default;
};

/// Every standard tableau of every shape in P_n^l, with precomputed
/// transposition and conjugation tables. Immutable after construction.
class TableauCatalog {
 public:
  TableauCatalog(int n, int level);

  int n() const { return n_; }
  int level() const { return level_; }

  const std::vector<Multipartition>& shapes() const { return shapes_; }
  const std::vector<StdTableau>& tableaux(std::size_t shape) const { return tabs_[shape]; }
  const StdTableau& at(TabRef r) const { return tabs_[r.shape][r.index]; }
  std::size_t dim(std::size_t shape) const { return tabs_[shape].size(); }
  std::size_t total_tableaux() const { return total_; }

  std::optional<std::size_t> find_shape(const Multipartition& mp) const;
  std::optional<TabRef> find(const StdTableau& t) const;

  /// s_r . t, or nullopt when not standard (1 <= r < n).
  std::optional<TabRef> swap(TabRef t, int r) const;
  TabRef conjugate(TabRef t) const;
  std::size_t conjugate_shape(std::size_t shape) const { return conj_shape_[shape]; }

  /// All tableaux in (shape, index) order.
  std::vector<TabRef> all() const;

 private:
  int n_;
  int level_;
  std::size_t total_ = 0;
  std::vector<Multipartition> shapes_;
  std::vector<std::vector<StdTableau>> tabs_;
  std::vector<std::vector<std::vector<std::optional<TabRef>>>> swap_;
  std::vector<std::vector<TabRef>> conj_;
  std::vector<std::size_t> conj_shape_;
};

}  // namespace althecke
