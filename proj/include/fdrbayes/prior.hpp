#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fdrbayes {

struct PriorAtom {
    double location = 0.0;
    double weight = 0.0;
};

/// Finite mixture of point masses with a mandatory null atom at location 0.
///
/// Invariants enforced at construction:
///  - all weights strictly positive and summing to 1 (within `weight_tol`,
///    then renormalized exactly),
///  - atom locations pairwise distinct,
///  - exactly one atom at location 0 whose weight lies in (0, 1).
class DiscretePrior {
  public:
    explicit DiscretePrior(std::vector<PriorAtom> atoms, double weight_tol = 1e-12);

    /// Convenience builder for the three-point family pi0*d0 + pi1*d1 + (1-pi0-pi1)*d-1.
    /// Atoms with zero weight are dropped.
    static DiscretePrior three_point(double pi0, double pi1);

    /// Parses a comma-separated "location:weight" literal, e.g. "0:0.6,1:0.2,-1:0.2".
    /// Rejects weights not summing to 1 within 1e-9.
    static DiscretePrior parse(std::string_view literal);

    std::string to_literal() const;

    const std::vector<PriorAtom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    std::size_t null_index() const { return null_index_; }
    double null_weight() const { return atoms_[null_index_].weight; }

    double second_moment() const;
    double max_abs_location() const;

    /// True when for every atom (b, w) there is an atom (-b, w) within tol.
    bool is_symmetric(double tol = 1e-12) const;

  private:
    std::vector<PriorAtom> atoms_;
    std::size_t null_index_ = 0;
};

}  // namespace fdrbayes
