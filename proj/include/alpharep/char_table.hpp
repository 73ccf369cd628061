#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "alpharep/actions.hpp"
#include "alpharep/cyclotomic.hpp"
#include "alpharep/perm_group.hpp"

namespace alpharep {

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

// Maps group elements to table columns.
class ClassLocator {
public:
  virtual ~ClassLocator() = default;
  // Generators of one cyclic subgroup always receive a full power orbit of
  // labels, so sums over subgroups are exact even when labels are only
  // determined up to Galois conjugacy.
  virtual std::vector<std::size_t> locate(const std::vector<Permutation> &elems) const = 0;
};

// Columns in FiniteGroup class order.
std::shared_ptr<ClassLocator> enumerated_locator(const PermGroup &g);
// Identification by element order and power maps. Without class_reps,
// Galois conjugate classes are told apart only up to a table automorphism;
// with them, by conjugacy to the representative.
std::shared_ptr<ClassLocator>
power_map_locator(const PermGroup &g, std::vector<std::uint64_t> orders,
                  std::map<std::uint64_t, std::vector<std::size_t>> power_maps,
                  std::vector<Permutation> class_reps = {});

class ClassFunction {
public:
  ClassFunction() = default;
  ClassFunction(TablePtr t, std::vector<Cyclotomic> v);

  const TablePtr &table() const { return t_; }
  const std::vector<Cyclotomic> &values() const { return v_; }
  const Cyclotomic &operator[](std::size_t k) const { return v_[k]; }
  std::size_t size() const { return v_.size(); }
  const Cyclotomic &degree() const { return v_.front(); }

  ClassFunction &operator+=(const ClassFunction &o);
  ClassFunction &operator-=(const ClassFunction &o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction &b) { return a -= b; }
  friend ClassFunction operator*(const Cyclotomic &s, ClassFunction a);
  friend bool operator==(const ClassFunction &a, const ClassFunction &b)
  {
    return a.t_ == b.t_ && a.v_ == b.v_;
  }

  std::string str() const;

private:
  TablePtr t_;
  std::vector<Cyclotomic> v_;
};

class CharacterTable : public std::enable_shared_from_this<CharacterTable> {
public:
  std::string name;
  std::uint64_t order = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> orders;
  std::map<std::uint64_t, std::vector<std::size_t>> power_maps;
  std::vector<std::vector<Cyclotomic>> irr;

  // Present when the table belongs to a concrete permutation group.
  std::optional<PermGroup> group;
  std::vector<Permutation> class_reps;
  std::shared_ptr<ClassLocator> locator;

  std::size_t class_count() const { return sizes.size(); }
  std::size_t irreducible_count() const { return irr.size(); }
  std::uint64_t centralizer_order(std::size_t k) const { return order / sizes[k]; }
  std::uint64_t exponent() const;

  // Class of rep_k^e, via power maps; throws DataError if one is missing.
  std::size_t power_class(std::size_t k, long e) const;
  std::size_t inverse_class(std::size_t k) const;

  ClassFunction irreducible(std::size_t i) const;
  ClassFunction trivial() const;
  ClassFunction make(std::vector<Cyclotomic> v) const;

  // Fusion of a subgroup table into this one, cached per subgroup table.
  const std::vector<std::size_t> &fusion_from(const TablePtr &sub) const;

private:
  mutable std::mutex fusion_mutex_;
  mutable std::map<const CharacterTable *, std::pair<std::weak_ptr<const CharacterTable>,
                                                     std::vector<std::size_t>>>
      fusion_;
};

// Exact scalar product; inner_product additionally demands an integer.
Cyclotomic inner(const ClassFunction &a, const ClassFunction &b);
std::int64_t inner_product(const ClassFunction &a, const ClassFunction &b);
std::vector<std::int64_t> decompose(const ClassFunction &chi);
std::optional<std::size_t> find_irreducible(const ClassFunction &chi);
bool is_character(const ClassFunction &chi);

ClassFunction restrict_to(const ClassFunction &chi, const TablePtr &sub);
ClassFunction induce(const ClassFunction &omega, const TablePtr &ambient);

ClassFunction tensor(const ClassFunction &a, const ClassFunction &b);
ClassFunction sym_square(const ClassFunction &chi);
ClassFunction alt_square(const ClassFunction &chi);
// The linear character with kernel a (index 2 subgroup).
ClassFunction sign_character(const TablePtr &t, const PermGroup &a);
ClassFunction sign_twist(const ClassFunction &chi, const PermGroup &a);

ClassFunction permutation_character(const GroupAction &action, const TablePtr &t);
// pi - 1; throws InvalidArgument for intransitive actions.
ClassFunction augmentation_character(const GroupAction &action, const TablePtr &t);

std::vector<ClassFunction> galois_orbit(const ClassFunction &chi);

// Row and column orthogonality, trivial first row, degrees squared sum.
// Returns an empty string when the table is valid, else the first problem.
std::string validate_table(const CharacterTable &t);

// Equal up to simultaneous row and column permutation. Element orders are
// power-map data; with_orders = false compares values and class sizes only.
bool tables_equivalent(const CharacterTable &a, const CharacterTable &b, bool with_orders = true);

// Adds a group realization, locating columns by power maps.
void attach_group(CharacterTable &t, const PermGroup &g);

} // namespace alpharep
