#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bent {

// Largest group order accepted by the constructors.
inline constexpr int kMaxGroupOrder = 512;

// A finite group stored as an explicit Cayley table over element indices
// 0..n-1. Instances are immutable once constructed; the constructor checks
// the group axioms and computes the conjugacy classes.
class Group {
 public:
  // Validates closure, identity, inverses and associativity (exhaustive for
  // n <= 32, 10^4 sampled triples above). `cayley` is row-major n*n with
  // cayley[a*n + b] = a*b. Empty `labels` means "use the index".
  static Group FromCayley(std::string name, int order, std::vector<int> cayley,
                          int identity, std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }

  int multiply(int a, int b) const;
  int inverse(int a) const;
  // Unchecked lookup for inner loops.
  int mul(int a, int b) const { return cayley_[static_cast<size_t>(a) * order_ + b]; }
  std::span<const int> cayley() const { return cayley_; }

  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int x) const { return class_of_[x]; }
  std::span<const int> class_map() const { return class_of_; }
  const std::vector<int>& class_reps() const { return class_reps_; }
  const std::vector<int>& class_sizes() const { return class_sizes_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }

  bool is_abelian() const { return abelian_; }
  // Lcm of the element orders.
  int exponent() const { return exponent_; }
  int element_order(int x) const;

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Cyclic factor orders when the group was built as a direct product of
  // cyclic groups (element index is the row-major mixed-radix tuple). Empty
  // otherwise.
  const std::vector<int>& abelian_factors() const { return factors_; }
  // Set for groups built by make_named; selects the reference character
  // table.
  const std::string& catalog_name() const { return catalog_name_; }
  // D4 sits outside the groups with published tables and is flagged in
  // reports.
  bool exploratory() const { return exploratory_; }

  bool same_table(const Group& other) const {
    return order_ == other.order_ && identity_ == other.identity_ &&
           cayley_ == other.cayley_;
  }

 private:
  friend Group make_abelian(const std::vector<int>& factors);
  friend Group make_named(const std::string& name);

  Group() = default;

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> cayley_;
  std::vector<int> inverse_;
  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<int> class_sizes_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::string> labels_;
  std::vector<int> factors_;
  std::string catalog_name_;
  bool abelian_ = false;
  bool exploratory_ = false;
  int exponent_ = 1;
};

Group make_cyclic(int n);
Group make_abelian(const std::vector<int>& factors);
// "S3", "Q8", "V4" or "D4".
Group make_named(const std::string& name);

// Resolves a label used on the command line and in JSON files: "Z<n>",
// products such as "Z2xZ3", or a catalog name.
Group group_from_label(const std::string& label);

// Orbits of x -> h x h^-1, identity class first, then ordered by smallest
// member. Recomputed from the Cayley table.
std::vector<std::vector<int>> conjugacy_classes(const Group& g);

// Every associativity triple for n <= 32, otherwise `samples` random triples
// drawn with a fixed seed. Returns false on the first violation.
bool check_associative(int order, std::span<const int> cayley,
                       int samples = 10000, std::uint64_t seed = 0x5eed);

}  // namespace bent
