#include "fdrbayes/prior.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fdrbayes {

DiscretePrior::DiscretePrior(std::vector<PriorAtom> atoms, double weight_tol) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("DiscretePrior: no atoms");
    double sum = 0.0;
    for (const auto& a : atoms_) {
        if (!(a.weight > 0.0)) throw std::invalid_argument("DiscretePrior: weights must be strictly positive");
        if (!std::isfinite(a.location)) throw std::invalid_argument("DiscretePrior: non-finite atom location");
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > weight_tol)
        throw std::invalid_argument("DiscretePrior: weights sum to " + std::to_string(sum) + ", expected 1");
    for (auto& a : atoms_) a.weight /= sum;

    bool found_null = false;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms_.size(); ++j)
            if (atoms_[i].location == atoms_[j].location)
                throw std::invalid_argument("DiscretePrior: duplicate atom locations");
        if (atoms_[i].location == 0.0) {
            null_index_ = i;
            found_null = true;
        }
    }
    if (!found_null) throw std::invalid_argument("DiscretePrior: missing null atom at location 0");
    if (!(null_weight() > 0.0 && null_weight() < 1.0))
        throw std::invalid_argument("DiscretePrior: null weight must lie in (0,1)");
}

DiscretePrior DiscretePrior::three_point(double pi0, double pi1) {
    const double pim = 1.0 - pi0 - pi1;
    if (pi1 < 0.0 || pim < -1e-15) throw std::invalid_argument("three_point: weights out of range");
    std::vector<PriorAtom> atoms{{0.0, pi0}};
    if (pi1 > 0.0) atoms.push_back({1.0, pi1});
    if (pim > 0.0) atoms.push_back({-1.0, pim});
    return DiscretePrior(std::move(atoms), 1e-9);
}

DiscretePrior DiscretePrior::parse(std::string_view literal) {
    std::vector<PriorAtom> atoms;
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        const std::size_t comma = std::min(literal.find(',', pos), literal.size());
        std::string_view item = literal.substr(pos, comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("prior literal: expected location:weight, got '" + std::string(item) + "'");
        PriorAtom a;
        const auto* lb = item.data();
        auto r1 = std::from_chars(lb, lb + colon, a.location);
        auto r2 = std::from_chars(lb + colon + 1, lb + item.size(), a.weight);
        if (r1.ec != std::errc{} || r1.ptr != lb + colon || r2.ec != std::errc{} || r2.ptr != lb + item.size())
            throw std::invalid_argument("prior literal: malformed pair '" + std::string(item) + "'");
        atoms.push_back(a);
        if (comma == literal.size()) break;
        pos = comma + 1;
    }
    return DiscretePrior(std::move(atoms), 1e-9);
}

std::string DiscretePrior::to_literal() const {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out << ',';
        out << atoms_[i].location << ':' << atoms_[i].weight;
    }
    return out.str();
}

double DiscretePrior::second_moment() const {
    double m2 = 0.0;
    for (const auto& a : atoms_) m2 += a.weight * a.location * a.location;
    return m2;
}

double DiscretePrior::max_abs_location() const {
    double m = 0.0;
    for (const auto& a : atoms_) m = std::max(m, std::abs(a.location));
    return m;
}

bool DiscretePrior::is_symmetric(double tol) const {
    for (const auto& a : atoms_) {
        if (a.location == 0.0) continue;
        bool matched = false;
        for (const auto& b : atoms_)
            if (std::abs(b.location + a.location) <= tol && std::abs(b.weight - a.weight) <= tol) {
                matched = true;
                break;
            }
        if (!matched) return false;
    }
    return true;
}

}  // namespace fdrbayes
