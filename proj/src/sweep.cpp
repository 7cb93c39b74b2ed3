#include "cohomog7/sweep.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <tuple>

namespace cohomog7 {

std::string SearchSpec::key_string() const {
    std::string key = "families=";
    for (Family f : families) key += family_name(f);
    key += ";bound=" + std::to_string(bound);
    key += ";r=" + (r_filter ? r_filter->get_str() : std::string("*"));
    key += ";type_er=" + std::string(only_type_er ? "1" : "0");
    key += ";eschenburg=" + std::string(only_eschenburg ? "1" : "0");
    return key;
}

namespace {

// Values in [-bound, bound] congruent to 1 mod 4, ascending.
std::vector<long long> one_mod_four(long long bound) {
    std::vector<long long> out;
    for (long long v = -bound; v <= bound; ++v) {
        if (((v % 4) + 4) % 4 == 1) out.push_back(v);
    }
    return out;
}

std::vector<long long> nonzero_range(long long bound) {
    std::vector<long long> out;
    for (long long v = -bound; v <= bound; ++v) {
        if (v != 0) out.push_back(v);
    }
    return out;
}

std::vector<long long> positive_range(long long bound) {
    std::vector<long long> out;
    for (long long v = 1; v <= bound; ++v) out.push_back(v);
    return out;
}

void push_if_valid(std::vector<FamilyParams>& out, const FamilyParams& params) {
    if (is_valid(params)) out.push_back(params);
}

}  // namespace

std::vector<FamilyParams> enumerate_family(Family family, long long bound) {
    if (bound < 1) throw invalid_input("bound must be >= 1");
    if (bound == std::numeric_limits<long long>::max()) {
        throw invalid_input("bound too large");
    }
    std::vector<FamilyParams> out;

    switch (family) {
        case Family::L: {
            // The minus pair admits no sign flip inside the valid set
            // (p- = 1 mod 4 breaks under negation); the plus pair is
            // canonicalized to p+ > 0.
            const auto ones = one_mod_four(bound);
            const auto pos = positive_range(bound);
            const auto any = nonzero_range(bound);
            for (long long pm : ones)
                for (long long qm : ones)
                    for (long long pp : pos)
                        for (long long qp : any)
                            push_if_valid(out, FamilyParams::make_l(pm, qm, pp, qp));
            break;
        }
        case Family::M: {
            const auto ones = one_mod_four(bound);
            for (long long pm : ones)
                for (long long qm : ones)
                    for (long long pp : ones)
                        for (long long qp : ones)
                            push_if_valid(out, FamilyParams::make_m(pm, qm, pp, qp));
            break;
        }
        case Family::N: {
            // Both pairs survive the sign flip; canonicalize p- > 0, p+ > 0.
            const auto pos = positive_range(bound);
            const auto any = nonzero_range(bound);
            for (long long pm : pos)
                for (long long qm : any)
                    for (long long pp : pos)
                        for (long long qp : any)
                            push_if_valid(out, FamilyParams::make_n(pm, qm, pp, qp));
            break;
        }
        case Family::O: {
            const auto pos = positive_range(bound);
            const auto any = nonzero_range(bound);
            for (long long p : pos)
                for (long long q : any)
                    for (int m : {1, 2}) push_if_valid(out, FamilyParams::make_o(p, q, m));
            break;
        }
    }
    return out;
}

std::vector<ClassificationReport> classify_tuples(const std::vector<FamilyParams>& tuples,
                                                  SweepMode mode) {
    std::vector<ClassificationReport> out(tuples.size());
    const std::int64_t n = static_cast<std::int64_t>(tuples.size());
    if (mode == SweepMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = report(tuples[static_cast<std::size_t>(i)]);
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = report(tuples[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

namespace {

std::tuple<int, const mpz_class&, long long, long long, long long, long long, int> sort_key(
    const ClassificationReport& rep) {
    static const mpz_class kNoR = -1;
    return {static_cast<int>(rep.params.family),
            rep.r ? *rep.r : kNoR,
            rep.params.p_minus,
            rep.params.q_minus,
            rep.params.p_plus,
            rep.params.q_plus,
            rep.params.m};
}

}  // namespace

std::vector<ClassificationReport> run_search(const SearchSpec& spec, SweepMode mode) {
    if (spec.families.empty()) throw invalid_input("at least one family must be selected");
    if (spec.bound < 1) throw invalid_input("bound must be >= 1");

    std::vector<FamilyParams> tuples;
    for (Family f : spec.families) {
        auto part = enumerate_family(f, spec.bound);
        tuples.insert(tuples.end(), part.begin(), part.end());
    }

    std::vector<ClassificationReport> rows = classify_tuples(tuples, mode);

    std::erase_if(rows, [&spec](const ClassificationReport& rep) {
        if (spec.r_filter && (!rep.r || *rep.r != *spec.r_filter)) return true;
        if (spec.only_type_er && !rep.type_er) return true;
        if (spec.only_eschenburg && !rep.eschenburg_ring) return true;
        return false;
    });

    std::sort(rows.begin(), rows.end(),
              [](const ClassificationReport& a, const ClassificationReport& b) {
                  return sort_key(a) < sort_key(b);
              });
    return rows;
}

}  // namespace cohomog7
