#include "cohomog7/abelian.hpp"

#include <algorithm>

namespace cohomog7 {

AbelianGroup AbelianGroup::free_group(int rank) {
    if (rank < 0) throw invalid_input("free rank must be non-negative");
    AbelianGroup g;
    g.free_rank_ = rank;
    return g;
}

AbelianGroup AbelianGroup::cyclic(const mpz_class& n) {
    return normalize({n});
}

AbelianGroup AbelianGroup::normalize(std::vector<mpz_class> raw_factors) {
    AbelianGroup g;
    std::vector<mpz_class> t;
    for (const auto& f : raw_factors) {
        if (f < 0) throw invalid_input("cyclic factor must be non-negative, got " + f.get_str());
        if (f == 0) {
            ++g.free_rank_;
        } else if (f > 1) {
            t.push_back(f);
        }
        // factor 1 contributes the trivial group
    }

    // Restore the divisor chain: replace any non-dividing pair (d_i, d_j),
    // i < j, with (gcd, lcm). Per prime this is a pointwise (min, max) sort
    // of the valuation vectors, so the sweep terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[j] % t[i] == 0) continue;
                mpz_class g_ij = gcd(t[i], t[j]);
                t[j] = t[i] / g_ij * t[j];
                t[i] = g_ij;
                changed = true;
            }
        }
    }
    // gcd steps can create 1s
    std::erase(t, mpz_class(1));
    g.torsion_ = std::move(t);
    return g;
}

AbelianGroup AbelianGroup::from_parts(int free_rank, std::vector<mpz_class> factors) {
    if (free_rank < 0) throw invalid_input("free rank must be non-negative");
    for (int i = 0; i < free_rank; ++i) factors.emplace_back(0);
    return normalize(std::move(factors));
}

std::vector<mpz_class> AbelianGroup::factors_as_list() const {
    std::vector<mpz_class> out(static_cast<std::size_t>(free_rank_), mpz_class(0));
    out.insert(out.end(), torsion_.begin(), torsion_.end());
    return out;
}

std::optional<mpz_class> AbelianGroup::order() const {
    if (free_rank_ > 0) return std::nullopt;
    mpz_class n = 1;
    for (const auto& d : torsion_) n *= d;
    return n;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
    std::vector<mpz_class> factors = torsion_;
    factors.insert(factors.end(), other.torsion_.begin(), other.torsion_.end());
    AbelianGroup g = normalize(std::move(factors));
    g.free_rank_ = free_rank_ + other.free_rank_;
    return g;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank_ == 1) {
        out = "Z";
    } else if (free_rank_ > 1) {
        out = "Z^" + std::to_string(free_rank_);
    }
    for (const auto& d : torsion_) {
        if (!out.empty()) out += " + ";
        out += "Z_" + d.get_str();
    }
    return out;
}

}  // namespace cohomog7
