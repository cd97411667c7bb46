#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace neumaier {

// Index of a group element. Index 0 is always the identity.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

inline constexpr std::size_t kDefaultMaxOrder = 1024;

// A finite group stored as an explicit multiplication table.
//
// Instances are immutable handles onto shared table data, so copying is
// cheap and concurrent reads are safe.
class FiniteGroup {
 public:
  // Validates the table: identity at index 0, every row and column a
  // permutation, every element invertible. Associativity is not checked
  // here; see check_associativity().
  FiniteGroup(std::string descriptor, std::size_t order, std::vector<Element> mul,
              std::vector<std::string> labels);

  std::size_t order() const noexcept { return data_->order; }
  const std::string& descriptor() const noexcept { return data_->descriptor; }

  Element mul(Element a, Element b) const noexcept { return data_->mul[a * data_->order + b]; }
  Element inv(Element a) const noexcept { return data_->inv[a]; }
  std::span<const Element> row(Element a) const noexcept {
    return {data_->mul.data() + a * data_->order, data_->order};
  }
  std::span<const Element> table() const noexcept { return data_->mul; }

  const std::string& label(Element a) const { return data_->labels.at(a); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }

  std::uint32_t element_order(Element a) const noexcept { return data_->element_order[a]; }
  std::uint32_t exponent() const noexcept { return data_->exponent; }
  bool is_abelian() const noexcept { return data_->abelian; }

  // Exhaustive O(v^3) associativity test.
  bool check_associativity() const;

  // Same table (descriptors and labels are ignored).
  bool same_table(const FiniteGroup& other) const noexcept;

 private:
  struct Data {
    std::string descriptor;
    std::size_t order = 0;
    std::vector<Element> mul;
    std::vector<Element> inv;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> element_order;
    std::uint32_t exponent = 1;
    bool abelian = true;
  };
  std::shared_ptr<const Data> data_;
};

// Builds a group from a structure descriptor such as "C2xC8", "D16",
// "C2^6" or "C4xC2^4". `Cn` is cyclic of order n, `Dn` dihedral of order n
// (n even), `x` is the direct product and `^k` repeats a factor.
//
// Element layout: direct products are row-major with the leftmost factor
// most significant. Cn element i is a^i. Dn element i < n/2 is r^i and
// element n/2 + i is r^i s, with s r s = r^-1.
FiniteGroup make_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);

// Normalized descriptor: adjacent equal factors merged ("C2xC2^2" -> "C2^3").
std::string normalize_descriptor(std::string_view spec);

// Index of (x, y) is x * |b| + y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t max_order = kDefaultMaxOrder);

inline Element product_index(const FiniteGroup& b, Element x, Element y) {
  return static_cast<Element>(x * b.order() + y);
}

class Subgroup {
 public:
  // Checks closure; throws InvalidInput if `members` is not a subgroup.
  Subgroup(FiniteGroup parent, ElementSet members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_.order() / members_.size(); }
  bool contains(Element x) const noexcept { return mask_[x] != 0; }

  bool operator==(const Subgroup& other) const noexcept { return members_ == other.members_; }

 private:
  FiniteGroup parent_;
  ElementSet members_;
  std::vector<std::uint8_t> mask_;
};

struct CosetDecomposition {
  // reps[0] == identity and cosets[0] is the subgroup itself; every other
  // rep is the minimum index of its coset and cosets appear in rep order.
  std::vector<Element> reps;
  std::vector<ElementSet> cosets;
  // coset_of[x] is the position of the coset containing x.
  std::vector<std::uint32_t> coset_of;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// Right cosets Hg.
CosetDecomposition right_cosets(const Subgroup& h);

bool is_normal(const Subgroup& h);
Subgroup center(const FiniteGroup& g);

ElementSet inverse_set(const FiniteGroup& g, std::span<const Element> xs);
bool is_inverse_closed(const FiniteGroup& g, std::span<const Element> xs);

// Every subgroup of the given order, sorted by member list.
std::vector<Subgroup> subgroups_of_order(const FiniteGroup& g, std::size_t order);

// Greedy generating sequence: repeatedly adds the highest-order element not
// yet generated (ties to the smallest index), starting from `seed`.
std::vector<Element> generating_sequence(const FiniteGroup& g, std::span<const Element> seed = {});

// The subgroup as a group in its own right; to_parent[i] is the parent
// index of element i. Element order follows the sorted member list.
struct InducedGroup {
  FiniteGroup group;
  std::vector<Element> to_parent;
};
InducedGroup induced_group(const Subgroup& h, std::string descriptor = "");

// Sorted, de-duplicated copy; throws InvalidInput on out-of-range entries.
ElementSet make_element_set(const FiniteGroup& g, std::vector<Element> xs);

// Image {x * g : x in xs}, sorted.
ElementSet right_translate(const FiniteGroup& g, std::span<const Element> xs, Element by);

}  // namespace neumaier
