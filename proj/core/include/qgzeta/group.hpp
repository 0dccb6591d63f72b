#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qgzeta/matrix.hpp"
#include "qgzeta/types.hpp"

namespace qgz {

// Finite group given by its multiplication table. Immutable once built;
// element 0 is always the identity.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::string> names,
                                std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(names_.size()); }
  int op(int a, int b) const;
  int inverse(int g) const;
  int power(int g, int e) const;  // e >= 0
  int order_of(int g) const;
  const std::string& name(int g) const;
  bool abelian() const { return abelian_; }

 private:
  FiniteGroup() = default;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic_group(int n);
// Direct product of cyclic groups; element names are comma-joined exponent
// tuples, the first factor varying slowest.
GroupPtr product_group(const std::vector<int>& orders);

// Unitary matrix representation, one matrix per group element.
struct Representation {
  GroupPtr group;
  std::string name;
  int degree = 0;
  std::vector<ComplexMatrix> matrices;

  cplx character(int g) const { return trace(matrices.at(g)); }
};

struct RepValidation {
  bool pass = false;
  double worst = 0.0;   // largest deviation found across all checks
  std::string detail;   // what/where the worst deviation was
};
RepValidation validate_representation(const Representation& rep);

// Irreducible representations; the trivial one is always first.
struct IrrepSet {
  std::vector<Representation> reps;
};

// All characters of an abelian group, built by extending characters up a
// chain of cyclic subgroups; exact up to roots-of-unity rounding.
IrrepSet characters_abelian(const GroupPtr& group);

// Homomorphism/unitarity of each member, sum of squared degrees equal to the
// group order, first representation trivial, character orthonormality.
// Throws InputError on failure.
void validate_irrep_set(const IrrepSet& set, const FiniteGroup& group);

Representation trivial_representation(const GroupPtr& group);

}  // namespace qgz
