#include "toricnp/toric_sum.hpp"

#include "toricnp/ntt.hpp"
#include "toricnp/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace toricnp::oracle {

namespace {

using u64 = std::uint64_t;

std::uint32_t residue(std::int64_t c, int p) {
    std::int64_t r = c % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

u64 field_size(int p, int k) {
    auto s = nt::checked_pow(static_cast<u64>(p), static_cast<unsigned>(k));
    if (!s) throw std::overflow_error("p^k overflows 64 bits");
    return *s;
}

}  // namespace

void validate(const SumSpec& spec, Algorithm algorithm) {
    if (spec.n < 1) throw std::invalid_argument("n must be positive");
    if (spec.p < 3 || spec.p > 65535 || !nt::is_prime(static_cast<u64>(spec.p))) {
        throw std::invalid_argument("p must be an odd prime below 65536");
    }
    if (spec.n % spec.p == 0) throw std::invalid_argument("p divides n: degenerate family");
    if (spec.k < 1) throw std::invalid_argument("extension degree k must be >= 1");
    for (std::int64_t c : {spec.c1, spec.c2, spec.c3, spec.t}) {
        if (residue(c, spec.p) == 0) throw std::invalid_argument("coefficients and t must be nonzero mod p");
    }
    const u64 q = field_size(spec.p, spec.k);
    if (algorithm == Algorithm::naive) {
        if (q > 31623 || q * q > kNaivePairLimit) {
            throw std::invalid_argument("naive enumeration limited to p^(2k) <= 1e9 (p^k = " + std::to_string(q) + ")");
        }
    } else if (q > kConvolutionFieldLimit) {
        throw std::invalid_argument("convolution limited to p^k <= 1e8 (p^k = " + std::to_string(q) + ")");
    }
}

SumContext::SumContext(int p, int k) : p_(p), k_(k), field_(gf::build_field(static_cast<u64>(p), k)) {
    if (field_.size() > kConvolutionFieldLimit) {
        throw std::invalid_argument("field size exceeds the convolution limit 1e8");
    }
    traces_ = gf::trace_table(field_);
}

std::vector<std::vector<std::uint64_t>> SumContext::histograms(int n, std::int64_t c1, std::int64_t c2,
                                                               std::span<const std::int64_t> c3t,
                                                               Algorithm algorithm,
                                                               const EngineOptions& options) const {
    for (std::int64_t c : c3t) validate(SumSpec{n, p_, k_, c1, c2, c, 1}, algorithm);
    auto result = algorithm == Algorithm::naive ? naive(n, c1, c2, c3t) : convolution(n, c1, c2, c3t, options);
    const unsigned __int128 units = field_.unit_order();
    for (const auto& h : result) {
        unsigned __int128 total = 0;
        for (u64 m : h) total += m;
        if (total != units * units) throw std::logic_error("toric histogram does not count every pair");
    }
    return result;
}

// Direct enumeration of (x, y) in the polynomial basis. The cross term uses
// tr(a b) = a^T Q b with Q the trace form on basis monomials.
std::vector<std::vector<std::uint64_t>> SumContext::naive(int n, std::int64_t c1, std::int64_t c2,
                                                          std::span<const std::int64_t> c3t) const {
    const auto& F = field_;
    const int d = F.degree();
    const u64 p = F.p();
    const u64 q = F.size();

    std::vector<std::vector<std::uint32_t>> Q(d, std::vector<std::uint32_t>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            gf::FieldElem xi = F.zero(), xj = F.zero();
            xi.coeffs[i] = 1;
            xj.coeffs[j] = 1;
            Q[i][j] = F.trace(F.mul(xi, xj));
        }
    }

    const std::size_t units = static_cast<std::size_t>(q - 1);
    std::vector<std::uint32_t> tr_pow(units), tr_y(units);
    std::vector<std::uint32_t> inv(units * d);
    for (u64 code = 1; code < q; ++code) {
        const std::size_t u = static_cast<std::size_t>(code - 1);
        const gf::FieldElem x = F.from_index(code);
        tr_pow[u] = F.trace(F.pow(x, static_cast<u64>(n)));
        tr_y[u] = F.trace(x);
        const gf::FieldElem xi = F.inv(x);
        std::copy(xi.coeffs.begin(), xi.coeffs.end(), inv.begin() + static_cast<std::ptrdiff_t>(u * d));
    }

    // tr(c z) = c tr(z) for c in F_p, so one joint histogram over
    // (a1 tr(x^n) + a2 tr(y), tr(1/(xy))) serves every c3 t.
    const std::uint32_t a1 = residue(c1, p_), a2 = residue(c2, p_);
    std::vector<u64> a3s;
    for (std::int64_t c : c3t) a3s.push_back(residue(c, p_));
    const bool use_joint = p <= static_cast<u64>(kNaiveJointMaxPrime) && a3s.size() > 1;
    std::vector<std::uint64_t> joint(use_joint ? p * p : 0, 0);
    std::vector<std::vector<std::uint64_t>> out(a3s.size(), std::vector<std::uint64_t>(p, 0));
    std::vector<std::uint32_t> row(d);
    for (std::size_t ux = 0; ux < units; ++ux) {
        // row = (x^{-1})^T Q
        for (int j = 0; j < d; ++j) {
            u64 acc = 0;
            for (int i = 0; i < d; ++i) acc += u64{inv[ux * d + i]} * Q[i][j] % p;
            row[j] = static_cast<std::uint32_t>(acc % p);
        }
        const u64 base = u64{a1} * tr_pow[ux] % p;
        for (std::size_t uy = 0; uy < units; ++uy) {
            const u64 u = (base + u64{a2} * tr_y[uy]) % p;
            u64 w = 0;
            const std::uint32_t* iy = inv.data() + uy * d;
            for (int j = 0; j < d; ++j) w += u64{row[j]} * iy[j];
            w %= p;
            if (use_joint) {
                ++joint[u * p + w];
            } else {
                for (std::size_t s = 0; s < a3s.size(); ++s) ++out[s][(u + a3s[s] * w) % p];
            }
        }
    }

    if (use_joint) {
        for (std::size_t s = 0; s < a3s.size(); ++s) {
            for (u64 u = 0; u < p; ++u) {
                for (u64 w = 0; w < p; ++w) out[s][(u + a3s[s] * w) % p] += joint[u * p + w];
            }
        }
    }
    return out;
}

// With x = g^i, y = g^j: tr f = A_i + B_j + C_{i+j}, where A_i = c1 tr(g^{ni}),
// B_j = c2 tr(g^j), C_l = c3 t tr(g^{-l}). For each p-th root of unity eta mod
// an NTT prime, sum_v M_v eta^v = sum_l C'(l) (a * b)(l) with a = eta^A,
// b = eta^B, C' = eta^C, and * the cyclic convolution of length p^k - 1.
// The p evaluations are inverted to M_v mod P, with CRT over enough primes.
std::vector<std::vector<std::uint64_t>> SumContext::convolution(int n, std::int64_t c1, std::int64_t c2,
                                                                std::span<const std::int64_t> c3t,
                                                                const EngineOptions& options) const {
    const int p = p_;
    const std::size_t N = traces_.size();
    const auto& T = traces_;

    std::vector<std::uint16_t> A(N), B(N);
    const std::uint32_t a1 = residue(c1, p), a2 = residue(c2, p);
    for (std::size_t i = 0; i < N; ++i) {
        A[i] = static_cast<std::uint16_t>(a1 * T[(static_cast<unsigned __int128>(n) * i) % N] % p);
        B[i] = static_cast<std::uint16_t>(a2 * T[i] % p);
    }
    // C_l = c3 t tr(g^{-l}); the spectrum is grouped by tr(g^{-l}) once and
    // each c3 t only rescales the group index.
    std::vector<std::uint32_t> a3s;
    for (std::int64_t c : c3t) a3s.push_back(residue(c, p));

    const int log_len = ntt::ceil_log2(2 * N - 1);
    // M_v <= N^2; one prime near 2^62 covers N < 2^30.
    const unsigned __int128 bound = static_cast<unsigned __int128>(N) * N;
    const std::size_t prime_count = bound < (static_cast<unsigned __int128>(1) << 61) ? 1 : 2;
    const auto primes = ntt::find_primes(static_cast<u64>(p), log_len, prime_count);

    const std::size_t S = c3t.size();
    // residues[prime][s][v]
    std::vector<std::vector<std::vector<u64>>> residues(prime_count,
                                                        std::vector<std::vector<u64>>(S, std::vector<u64>(p)));

    const std::size_t buffer_bytes = (std::size_t{2} << log_len) * sizeof(u64);
    unsigned threads = std::max(1u, options.threads);
    if (options.mem_budget_gb > 0) {
        const double budget = options.mem_budget_gb * 1024.0 * 1024.0 * 1024.0;
        const auto fit = static_cast<unsigned>(budget / static_cast<double>(buffer_bytes));
        if (fit == 0) throw std::runtime_error("memory budget too small for one transform buffer pair");
        threads = std::min(threads, fit);
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(p - 1));

    for (std::size_t pi = 0; pi < prime_count; ++pi) {
        const ntt::Plan plan(primes[pi], log_len);
        const auto& m = plan.arith();
        const u64 P = primes[pi].modulus;
        const u64 omega = m.to_mont(nt::pow_mod(primes[pi].generator, (P - 1) / static_cast<u64>(p), P));

        // evaluations[s][u] = sum_v M_v omega^{u v} (Montgomery form)
        std::vector<std::vector<u64>> evaluations(S, std::vector<u64>(p, 0));
        const u64 total = m.to_mont(static_cast<u64>(bound % P));
        for (std::size_t s = 0; s < S; ++s) evaluations[s][0] = total;

        auto worker = [&](unsigned tid) {
            std::vector<u64> fa(plan.size()), fb(plan.size()), pw(p), grouped(p);
            for (int u = 1 + static_cast<int>(tid); u < p; u += static_cast<int>(threads)) {
                const u64 eta = m.pow(omega, static_cast<u64>(u));
                pw[0] = m.one();
                for (int v = 1; v < p; ++v) pw[v] = m.mul(pw[v - 1], eta);
                std::fill(fa.begin() + static_cast<std::ptrdiff_t>(N), fa.end(), 0);
                std::fill(fb.begin() + static_cast<std::ptrdiff_t>(N), fb.end(), 0);
                for (std::size_t i = 0; i < N; ++i) {
                    fa[i] = pw[A[i]];
                    fb[i] = pw[B[i]];
                }
                plan.forward(fa);
                plan.forward(fb);
                for (std::size_t i = 0; i < fa.size(); ++i) fa[i] = m.mul(fa[i], fb[i]);
                plan.inverse(fa);
                for (std::size_t l = 0; l + N < fa.size() && l < N; ++l) fa[l] = m.add(fa[l], fa[l + N]);
                std::fill(grouped.begin(), grouped.end(), 0);
                grouped[T[0]] = fa[0];
                for (std::size_t l = 1; l < N; ++l) grouped[T[N - l]] = m.add(grouped[T[N - l]], fa[l]);
                for (std::size_t s = 0; s < S; ++s) {
                    u64 acc = 0;
                    for (int w = 0; w < p; ++w) {
                        acc = m.add(acc, m.mul(grouped[w], pw[static_cast<u64>(a3s[s]) * w % p]));
                    }
                    evaluations[s][u] = acc;
                }
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
            for (auto& th : pool) th.join();
        }

        // M_v = p^{-1} sum_u omega^{-uv} E(u)
        const u64 inv_p = m.to_mont(*nt::inv_mod(static_cast<u64>(p), P));
        const u64 omega_inv = m.pow(omega, static_cast<u64>(p - 1));
        for (std::size_t s = 0; s < S; ++s) {
            for (int v = 0; v < p; ++v) {
                const u64 step = m.pow(omega_inv, static_cast<u64>(v));
                u64 acc = 0, w = m.one();
                for (int u = 0; u < p; ++u) {
                    acc = m.add(acc, m.mul(evaluations[s][u], w));
                    w = m.mul(w, step);
                }
                residues[pi][s][v] = m.from_mont(m.mul(acc, inv_p));
            }
        }
    }

    std::vector<std::vector<std::uint64_t>> out(S, std::vector<std::uint64_t>(p));
    for (std::size_t s = 0; s < S; ++s) {
        for (int v = 0; v < p; ++v) {
            if (prime_count == 1) {
                out[s][v] = residues[0][s][v];
                continue;
            }
            // Two-prime CRT: x = r0 + P0 * ((r1 - r0) * P0^{-1} mod P1).
            const u64 P0 = primes[0].modulus, P1 = primes[1].modulus;
            const u64 r0 = residues[0][s][v], r1 = residues[1][s][v];
            const u64 diff = (r1 + P1 - r0 % P1) % P1;
            const u64 h = nt::mul_mod(diff, *nt::inv_mod(P0 % P1, P1), P1);
            const unsigned __int128 x = static_cast<unsigned __int128>(P0) * h + r0;
            if (x > bound) throw std::logic_error("CRT reconstruction exceeds the count bound");
            out[s][v] = static_cast<u64>(x);
        }
    }
    return out;
}

std::vector<std::uint64_t> toric_histogram(const SumSpec& spec, Algorithm algorithm, const EngineOptions& options) {
    validate(spec, algorithm);
    const SumContext ctx(spec.p, spec.k);
    const std::int64_t c3t = static_cast<std::int64_t>(residue(spec.c3, spec.p)) * residue(spec.t, spec.p) % spec.p;
    return ctx.histograms(spec.n, spec.c1, spec.c2, std::span<const std::int64_t>(&c3t, 1), algorithm, options)
        .front();
}

CycInt toric_sum(const SumSpec& spec, Algorithm algorithm, const EngineOptions& options) {
    const auto hist = toric_histogram(spec, algorithm, options);
    return CycInt::from_counts(spec.p, std::span<const std::uint64_t>(hist));
}

}  // namespace toricnp::oracle
