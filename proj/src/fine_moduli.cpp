#include "parastab/fine_moduli.hpp"

#include <map>
#include <numeric>
#include <string>

namespace parastab {

void validate(const FineInput& in) {
    if (in.r <= 0) throw ValidationError("rank must be positive", "/r");
    if (in.g < 0) throw ValidationError("genus must be non-negative", "/g");
    for (std::size_t x = 0; x < in.jumps.size(); ++x) {
        const std::string ptr = "/jumps/" + std::to_string(x);
        long total = 0;
        for (std::size_t i = 0; i < in.jumps[x].size(); ++i) {
            if (in.jumps[x][i] <= 0) throw ValidationError("jumps must be positive", ptr + "/" + std::to_string(i));
            total += in.jumps[x][i];
        }
        if (total != in.r) throw ValidationError("jumps at a puncture must sum to the rank", ptr);
    }
}

long chi(const FineInput& in, const Kappa& kappa, long h) {
    if (kappa.size() != in.jumps.size()) throw ValidationError("kappa needs one entry per puncture", "/kappa");
    long value = in.d + in.r * (1 - in.g - h);
    for (std::size_t x = 0; x < kappa.size(); ++x) {
        if (kappa[x] < 1 || kappa[x] > in.jumps[x].size() + 1) {
            throw ValidationError("kappa(" + std::to_string(x) + ") outside 1.." + std::to_string(in.jumps[x].size() + 1),
                                  "/kappa/" + std::to_string(x));
        }
        for (std::size_t i = 0; i + 1 < kappa[x]; ++i) value -= in.jumps[x][i];
    }
    return value;
}

long fine_gcd(const FineInput& in) {
    // r is redundant once a puncture exists (its jumps sum to r) and gives the
    // classical gcd(r, d) without punctures.
    long g = std::gcd(std::abs(in.d), in.r);
    for (const auto& row : in.jumps) {
        for (long m : row) g = std::gcd(g, m);
    }
    return g;
}

bool is_fine(const FineInput& in) {
    validate(in);
    return fine_gcd(in) == 1;
}

long evaluate(const FineInput& in, const std::vector<ChiTerm>& terms) {
    long total = 0;
    for (const auto& t : terms) total += t.a * chi(in, t.kappa, t.h);
    return total;
}

NotFineError::NotFineError(long gcd)
    : PreconditionError("gcd of the degree and the jumps is " + std::to_string(gcd) + ", not 1"), gcd_(gcd) {}

namespace {

// Linear combination of chi values keyed by (kappa, h).
using Combination = std::map<std::pair<Kappa, long>, long>;

void add(Combination& acc, const Combination& c, long scale) {
    for (const auto& [key, a] : c) acc[key] += scale * a;
}

}  // namespace

ChiCertificate bezout_certificate(const FineInput& in) {
    validate(in);
    const long gcd = fine_gcd(in);
    if (gcd != 1) throw NotFineError(gcd);
    const Kappa ones(in.jumps.size(), 1);
    ChiCertificate cert;

    const long base = chi(in, ones, 0);  // d + r(1 - g)
    if ((base - 1) % in.r == 0) {
        cert.terms.push_back({1, ones, (base - 1) / in.r});
        cert.value = evaluate(in, cert.terms);
        return cert;
    }

    const Combination rank_gen{{{ones, -1}, 1}, {{ones, 0}, -1}};
    Combination degree_gen{{{ones, 0}, 1}};
    add(degree_gen, rank_gen, -(1 - in.g));

    std::vector<std::pair<long, Combination>> gens{{in.d, degree_gen}};
    if (in.jumps.empty()) gens.push_back({in.r, rank_gen});
    for (std::size_t x = 0; x < in.jumps.size(); ++x) {
        for (std::size_t i = 0; i < in.jumps[x].size(); ++i) {
            Kappa lo = ones, hi = ones;
            lo[x] = i + 1;
            hi[x] = i + 2;
            gens.push_back({in.jumps[x][i], Combination{{{lo, 0}, 1}, {{hi, 0}, -1}}});
        }
    }

    // Running Bezout: g = sum_k coeff_k gens_k.
    long g = 0;
    std::vector<long> coeff(gens.size(), 0);
    for (std::size_t k = 0; k < gens.size() && std::abs(g) != 1; ++k) {
        // extended Euclid on (g, v)
        long old_r = g, r = gens[k].first, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const long q = old_r / r;
            old_r = std::exchange(r, old_r - q * r);
            old_s = std::exchange(s, old_s - q * s);
            old_t = std::exchange(t, old_t - q * t);
        }
        for (std::size_t j = 0; j < k; ++j) coeff[j] *= old_s;
        coeff[k] = old_t;
        g = old_r;
    }
    const long sign = g < 0 ? -1 : 1;
    Combination total;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (coeff[k] != 0) add(total, gens[k].second, sign * coeff[k]);
    }
    for (const auto& [key, a] : total) {
        if (a != 0) cert.terms.push_back({a, key.first, key.second});
    }
    cert.value = evaluate(in, cert.terms);
    return cert;
}

}  // namespace parastab
