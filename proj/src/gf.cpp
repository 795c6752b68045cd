#include "egmc/gf.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "egmc/errors.hpp"

namespace egmc {

namespace {

using Poly = std::vector<fq_elem>;  // little-endian coefficients

int poly_deg(const Poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

void poly_trim(Poly& a) { a.resize(std::size_t(poly_deg(a) + 1)); }

Poly poly_mul(const BaseField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

void poly_mod_inplace(const BaseField& F, Poly& a, const Poly& f) {
    const int df = poly_deg(f);
    const fq_elem lead_inv = F.inv(f[std::size_t(df)]);
    for (int d = poly_deg(a); d >= df; d = poly_deg(a)) {
        const fq_elem c = F.mul(a[std::size_t(d)], lead_inv);
        for (int i = 0; i <= df; ++i)
            a[std::size_t(d - df + i)] = F.sub(a[std::size_t(d - df + i)], F.mul(c, f[std::size_t(i)]));
    }
    poly_trim(a);
}

Poly poly_mulmod(const BaseField& F, const Poly& a, const Poly& b, const Poly& f) {
    Poly r = poly_mul(F, a, b);
    poly_mod_inplace(F, r, f);
    return r;
}

Poly poly_powmod(const BaseField& F, Poly base, std::uint64_t n, const Poly& f) {
    Poly r{1};
    poly_mod_inplace(F, base, f);
    while (n) {
        if (n & 1) r = poly_mulmod(F, r, base, f);
        base = poly_mulmod(F, base, base, f);
        n >>= 1;
    }
    return r;
}

Poly poly_gcd(const BaseField& F, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        poly_mod_inplace(F, a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

/// f monic of degree d >= 1 over F_q: irreducible iff x^(q^d) = x mod f and
/// gcd(x^(q^(d/l)) - x, f) = 1 for every prime l | d.
bool poly_irreducible(const BaseField& F, const Poly& f) {
    const int d = poly_deg(f);
    if (d < 1) return false;
    if (f[0] == 0) return d == 1;
    const Poly x{0, 1};
    auto x_q_power = [&](std::uint32_t times) {
        Poly t = x;
        for (std::uint32_t i = 0; i < times; ++i) t = poly_powmod(F, t, F.q(), f);
        return t;
    };
    Poly t = x_q_power(std::uint32_t(d));
    Poly diff = t;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = F.sub(diff[1], 1);
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (std::uint32_t l : prime_factors(std::uint32_t(d))) {
        Poly s = x_q_power(std::uint32_t(d) / l);
        s.resize(std::max<std::size_t>(s.size(), 2), 0);
        s[1] = F.sub(s[1], 1);
        poly_trim(s);
        Poly g = poly_gcd(F, s, f);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

/// Lexicographically least monic irreducible of degree d over F_q, the
/// non-leading coefficients compared as the integer sum c_i q^i.
Poly least_irreducible(const BaseField& F, std::uint32_t d) {
    const std::uint64_t q = F.q();
    for (std::uint64_t n = 0;; ++n) {
        Poly f(d + 1, 0);
        f[d] = 1;
        std::uint64_t v = n;
        for (std::uint32_t i = 0; i < d && v; ++i, v /= q) f[i] = fq_elem(v % q);
        if (v) throw parameter_error("no irreducible polynomial found");
        if (poly_irreducible(F, f)) return f;
    }
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// value <-> digit-vector conversions for F_q = F_p[x]/(g)
Poly value_to_poly(std::uint32_t v, std::uint32_t p) {
    Poly c;
    while (v) {
        c.push_back(fq_elem(v % p));
        v /= p;
    }
    return c;
}

std::uint32_t poly_to_value(const Poly& c, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

std::mutex g_cache_mutex;

}  // namespace

BaseField::BaseField(std::uint32_t q) {
    static std::map<std::uint32_t, std::shared_ptr<const Core>> cache;
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = cache.find(q);
        if (it != cache.end()) {
            core_ = it->second;
            return;
        }
    }

    if (q < 2 || q > 65536) throw parameter_error("q out of range");
    std::uint32_t p = 0, e = 0;
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1 || !is_prime(p)) throw parameter_error("q is not a prime power");

    auto core = std::make_shared<Core>();
    core->q = q;
    core->p = p;
    core->e = e;
    core->bits = unsigned(std::bit_width(q - 1));

    // multiplication of raw element values, valid before tables exist
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> raw_mul;
    if (e == 1) {
        raw_mul = [p](std::uint32_t a, std::uint32_t b) { return (a * b) % p; };
    } else {
        BaseField Fp(p);
        core->modulus = least_irreducible(Fp, e);
        const Poly& mod = core->modulus;
        raw_mul = [Fp, mod, p](std::uint32_t a, std::uint32_t b) {
            Poly r = poly_mulmod(Fp, value_to_poly(a, p), value_to_poly(b, p), mod);
            return poly_to_value(r, p);
        };
    }

    auto raw_pow = [&](std::uint32_t a, std::uint32_t n) {
        std::uint32_t r = 1;
        while (n) {
            if (n & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            n >>= 1;
        }
        return r;
    };

    std::uint32_t g = 1;
    if (q > 2) {
        const auto factors = prime_factors(q - 1);
        for (g = 2; g < q; ++g) {
            bool ok = true;
            for (std::uint32_t l : factors)
                if (raw_pow(g, (q - 1) / l) == 1) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
    }

    core->log_tab.assign(q, 0);
    core->exp_tab.assign(std::size_t(2) * std::max<std::uint32_t>(q - 1, 1), 1);
    std::uint32_t acc = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        core->exp_tab[i] = fq_elem(acc);
        core->exp_tab[i + (q - 1)] = fq_elem(acc);
        core->log_tab[acc] = fq_elem(i);
        acc = raw_mul(acc, g);
    }

    core_ = core;
    std::lock_guard<std::mutex> lk(g_cache_mutex);
    cache.emplace(q, core_);
}

fq_elem BaseField::add(fq_elem a, fq_elem b) const {
    const Core& c = *core_;
    if (c.p == 2) return a ^ b;
    if (c.e == 1) return fq_elem((std::uint32_t(a) + b) % c.p);
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < c.e; ++i) {
        r += ((a % c.p) + (b % c.p)) % c.p * mul;
        a = fq_elem(a / c.p);
        b = fq_elem(b / c.p);
        mul *= c.p;
    }
    return fq_elem(r);
}

fq_elem BaseField::neg(fq_elem a) const {
    const Core& c = *core_;
    if (c.p == 2) return a;
    if (c.e == 1) return a ? fq_elem(c.p - a) : 0;
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < c.e; ++i) {
        std::uint32_t d = a % c.p;
        r += (d ? c.p - d : 0) * mul;
        a = fq_elem(a / c.p);
        mul *= c.p;
    }
    return fq_elem(r);
}

fq_elem BaseField::sub(fq_elem a, fq_elem b) const { return add(a, neg(b)); }

fq_elem BaseField::inv(fq_elem a) const {
    if (a == 0) throw singular_error("inverse of zero");
    const Core& c = *core_;
    if (c.q == 2) return 1;
    return c.exp_tab[(c.q - 1) - c.log_tab[a]];
}

fq_elem BaseField::pow(fq_elem a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    const Core& c = *core_;
    if (c.q == 2) return a;
    std::uint64_t ln = (std::uint64_t(c.log_tab[a]) * (n % (c.q - 1))) % (c.q - 1);
    return c.exp_tab[ln];
}

// ---------------------------------------------------------------------------

namespace {

// packed helpers for the q = 2 multiply fast path
constexpr std::size_t kMaxPackWords = 2;  // supports m <= 128

void pack_bits(const fq_elem* c, std::size_t n, std::uint64_t* w, std::size_t nw) {
    std::fill(w, w + nw, 0);
    for (std::size_t i = 0; i < n; ++i)
        if (c[i]) w[i >> 6] |= std::uint64_t(1) << (i & 63);
}

}  // namespace

ExtField::ExtField(const BaseField& base, std::uint32_t m) {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Core>> cache;
    const auto key = std::make_pair(base.q(), m);
    {
        std::lock_guard<std::mutex> lk(g_cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            core_ = it->second;
            return;
        }
    }
    if (m < 1 || m > 128) throw parameter_error("extension degree out of range");

    auto core = std::make_shared<Core>(base, m);
    core->modulus = least_irreducible(base, m);
    core->modulus.resize(m + 1, 0);

    // x^(m+j) mod f, iteratively: multiply by x, fold the top coefficient
    core->reduce_rows.assign(std::size_t(m) * std::max<std::uint32_t>(m - 1, 1), 0);
    {
        std::vector<fq_elem> r(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) r[i] = base.neg(core->modulus[i]);
        for (std::uint32_t j = 0; j + 1 < m; ++j) {
            std::copy(r.begin(), r.end(), core->reduce_rows.begin() + std::size_t(j) * m);
            fq_elem top = r[m - 1];
            for (std::uint32_t i = m - 1; i > 0; --i) r[i] = r[i - 1];
            r[0] = 0;
            if (top)
                for (std::uint32_t i = 0; i < m; ++i)
                    r[i] = base.add(r[i], base.mul(top, base.neg(core->modulus[i])));
        }
    }

    core->pack2 = (base.q() == 2 && m <= 64 * kMaxPackWords);
    if (core->pack2) {
        core->modulus_packed.assign(kMaxPackWords + 1, 0);
        pack_bits(core->modulus.data(), m + 1, core->modulus_packed.data(), kMaxPackWords + 1);
    }

    core_ = core;  // mul/frobenius below need a live field

    // Frobenius matrix: column j = coords of (x^j)^q = (x^q)^j
    {
        auto mut = std::const_pointer_cast<Core>(core_);
        mut->frob_mat.assign(std::size_t(m) * m, 0);
        ExtElem xq = pow(monomial(std::min(m - 1, 1u)), base.q());
        if (m == 1) xq = one();
        ExtElem col = one();
        for (std::uint32_t j = 0; j < m; ++j) {
            for (std::uint32_t i = 0; i < m; ++i) mut->frob_mat[std::size_t(i) * m + j] = col.c[i];
            if (j + 1 < m) col = mul(col, xq);
        }

        mut->trace_row.assign(m, 0);
        for (std::uint32_t j = 0; j < m; ++j) {
            ExtElem e = monomial(j), s = e;
            for (std::uint32_t i = 1; i < m; ++i) {
                e = frobenius(e, 1);
                s = add(s, e);
            }
            for (std::uint32_t i = 1; i < m; ++i)
                if (s.c[i]) throw std::logic_error("trace not in base field");
            mut->trace_row[j] = s.c[0];
        }
    }

    std::lock_guard<std::mutex> lk(g_cache_mutex);
    cache.emplace(key, core_);
}

ExtElem ExtField::zero() const { return ExtElem{std::vector<fq_elem>(core_->m, 0)}; }

ExtElem ExtField::one() const {
    ExtElem e = zero();
    e.c[0] = 1;
    return e;
}

ExtElem ExtField::monomial(std::uint32_t j) const {
    if (j >= core_->m) throw dimension_error("monomial degree out of range");
    ExtElem e = zero();
    e.c[j] = 1;
    return e;
}

ExtElem ExtField::from_coords(std::vector<fq_elem> c) const {
    if (c.size() != core_->m) throw dimension_error("coordinate count mismatch");
    return ExtElem{std::move(c)};
}

bool ExtField::is_zero(const ExtElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](fq_elem v) { return v == 0; });
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
    const BaseField& F = core_->base;
    ExtElem r = a;
    for (std::uint32_t i = 0; i < core_->m; ++i) r.c[i] = F.add(r.c[i], b.c[i]);
    return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
    const BaseField& F = core_->base;
    ExtElem r = a;
    for (std::uint32_t i = 0; i < core_->m; ++i) r.c[i] = F.sub(r.c[i], b.c[i]);
    return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
    const BaseField& F = core_->base;
    ExtElem r = a;
    for (auto& v : r.c) v = F.neg(v);
    return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
    const Core& c = *core_;
    const std::uint32_t m = c.m;
    if (c.pack2) {
        std::uint64_t wa[kMaxPackWords], wb[kMaxPackWords];
        std::uint64_t prod[2 * kMaxPackWords] = {0};
        pack_bits(a.c.data(), m, wa, kMaxPackWords);
        pack_bits(b.c.data(), m, wb, kMaxPackWords);
        for (std::uint32_t i = 0; i < m; ++i) {
            if (!((wa[i >> 6] >> (i & 63)) & 1)) continue;
            const std::uint32_t wsh = i >> 6, bsh = i & 63;
            for (std::size_t w = 0; w < kMaxPackWords; ++w) {
                prod[w + wsh] ^= wb[w] << bsh;
                if (bsh) prod[w + wsh + 1] ^= wb[w] >> (64 - bsh);
            }
        }
        for (std::uint32_t d = 2 * m - 2; d >= m; --d) {
            if (!((prod[d >> 6] >> (d & 63)) & 1)) continue;
            const std::uint32_t s = d - m, wsh = s >> 6, bsh = s & 63;
            for (std::size_t w = 0; w < kMaxPackWords + 1 && w + wsh < 2 * kMaxPackWords; ++w) {
                prod[w + wsh] ^= c.modulus_packed[w] << bsh;
                if (bsh && w + wsh + 1 < 2 * kMaxPackWords)
                    prod[w + wsh + 1] ^= c.modulus_packed[w] >> (64 - bsh);
            }
        }
        ExtElem r = zero();
        for (std::uint32_t i = 0; i < m; ++i) r.c[i] = fq_elem((prod[i >> 6] >> (i & 63)) & 1);
        return r;
    }

    const BaseField& F = c.base;
    std::vector<fq_elem> conv(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (!a.c[i]) continue;
        for (std::uint32_t j = 0; j < m; ++j)
            if (b.c[j]) conv[i + j] = F.add(conv[i + j], F.mul(a.c[i], b.c[j]));
    }
    ExtElem r = zero();
    std::copy(conv.begin(), conv.begin() + m, r.c.begin());
    for (std::uint32_t j = 0; j + 1 < m; ++j) {
        const fq_elem e = conv[m + j];
        if (!e) continue;
        const fq_elem* row = &c.reduce_rows[std::size_t(j) * m];
        for (std::uint32_t i = 0; i < m; ++i) r.c[i] = F.add(r.c[i], F.mul(e, row[i]));
    }
    return r;
}

ExtElem ExtField::mul_scalar(const ExtElem& a, fq_elem s) const {
    const BaseField& F = core_->base;
    ExtElem r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    return r;
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (is_zero(a)) throw singular_error("inverse of zero");
    const BaseField& F = core_->base;
    // extended Euclid in F_q[x] against the modulus
    Poly r0(core_->modulus), r1(a.c.begin(), a.c.end());
    poly_trim(r1);
    Poly s0{}, s1{1};
    while (poly_deg(r1) > 0) {
        const int d0 = poly_deg(r0), d1 = poly_deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(s0, s1);
            continue;
        }
        const fq_elem cq = F.mul(r0[std::size_t(d0)], F.inv(r1[std::size_t(d1)]));
        const int sh = d0 - d1;
        for (int i = 0; i <= d1; ++i)
            r0[std::size_t(i + sh)] = F.sub(r0[std::size_t(i + sh)], F.mul(cq, r1[std::size_t(i)]));
        s0.resize(std::max(s0.size(), s1.size() + std::size_t(sh)), 0);
        for (std::size_t i = 0; i < s1.size(); ++i)
            s0[i + std::size_t(sh)] = F.sub(s0[i + std::size_t(sh)], F.mul(cq, s1[i]));
        poly_trim(r0);
        if (poly_deg(r0) < poly_deg(r1)) {
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
    }
    if (poly_deg(r1) != 0) throw singular_error("element not invertible");
    const fq_elem scale = F.inv(r1[0]);
    ExtElem out = zero();
    for (std::size_t i = 0; i < s1.size() && i < core_->m; ++i) out.c[i] = F.mul(s1[i], scale);
    return out;
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t n) const {
    ExtElem r = one(), base_v = a;
    while (n) {
        if (n & 1) r = mul(r, base_v);
        base_v = mul(base_v, base_v);
        n >>= 1;
    }
    return r;
}

ExtElem ExtField::apply_fq_matrix(const std::vector<fq_elem>& mat, const ExtElem& a) const {
    const BaseField& F = core_->base;
    const std::uint32_t m = core_->m;
    ExtElem r = zero();
    for (std::uint32_t i = 0; i < m; ++i) {
        fq_elem acc = 0;
        const fq_elem* row = &mat[std::size_t(i) * m];
        for (std::uint32_t j = 0; j < m; ++j)
            if (a.c[j]) acc = F.add(acc, F.mul(row[j], a.c[j]));
        r.c[i] = acc;
    }
    return r;
}

ExtElem ExtField::frobenius(const ExtElem& a, std::uint64_t i) const {
    ExtElem r = a;
    for (std::uint64_t s = i % core_->m; s > 0; --s) r = apply_fq_matrix(core_->frob_mat, r);
    return r;
}

fq_elem ExtField::trace(const ExtElem& a) const {
    const BaseField& F = core_->base;
    fq_elem acc = 0;
    for (std::uint32_t j = 0; j < core_->m; ++j)
        if (a.c[j]) acc = F.add(acc, F.mul(core_->trace_row[j], a.c[j]));
    return acc;
}

ExtElem ExtField::random(Rng& rng) const {
    ExtElem e = zero();
    for (auto& v : e.c) v = core_->base.random(rng);
    return e;
}

bool ExtField::operator==(const ExtField& o) const {
    return core_ == o.core_ || (base() == o.base() && m() == o.m() && modulus() == o.modulus());
}

// ---------------------------------------------------------------------------

namespace {

/// In-place Gauss-Jordan inverse of an n x n matrix over F_q.
/// Returns false when singular.
bool gauss_inverse(const BaseField& F, std::vector<fq_elem>& a, std::uint32_t n,
                   std::vector<fq_elem>& out) {
    out.assign(std::size_t(n) * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) out[std::size_t(i) * n + i] = 1;
    for (std::uint32_t col = 0; col < n; ++col) {
        std::uint32_t piv = col;
        while (piv < n && a[std::size_t(piv) * n + col] == 0) ++piv;
        if (piv == n) return false;
        if (piv != col) {
            for (std::uint32_t j = 0; j < n; ++j) {
                std::swap(a[std::size_t(piv) * n + j], a[std::size_t(col) * n + j]);
                std::swap(out[std::size_t(piv) * n + j], out[std::size_t(col) * n + j]);
            }
        }
        const fq_elem pinv = F.inv(a[std::size_t(col) * n + col]);
        for (std::uint32_t j = 0; j < n; ++j) {
            a[std::size_t(col) * n + j] = F.mul(a[std::size_t(col) * n + j], pinv);
            out[std::size_t(col) * n + j] = F.mul(out[std::size_t(col) * n + j], pinv);
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const fq_elem f = a[std::size_t(r) * n + col];
            if (!f) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                a[std::size_t(r) * n + j] = F.sub(a[std::size_t(r) * n + j], F.mul(f, a[std::size_t(col) * n + j]));
                out[std::size_t(r) * n + j] = F.sub(out[std::size_t(r) * n + j], F.mul(f, out[std::size_t(col) * n + j]));
            }
        }
    }
    return true;
}

}  // namespace

Basis make_basis(const ExtField& ext, std::vector<ExtElem> elems) {
    const std::uint32_t m = ext.m();
    if (elems.size() != m) throw dimension_error("basis needs m elements");
    Basis b{ext, std::move(elems), {}, {}};
    b.to_power.assign(std::size_t(m) * m, 0);
    for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t i = 0; i < m; ++i) b.to_power[std::size_t(i) * m + j] = b.elems[j].c[i];
    std::vector<fq_elem> work = b.to_power;
    if (!gauss_inverse(ext.base(), work, m, b.from_power))
        throw parameter_error("basis elements are linearly dependent");
    return b;
}

Basis power_basis(const ExtField& ext) {
    std::vector<ExtElem> elems;
    for (std::uint32_t j = 0; j < ext.m(); ++j) elems.push_back(ext.monomial(j));
    return make_basis(ext, std::move(elems));
}

Basis random_basis(const ExtField& ext, Rng& rng) {
    const std::uint32_t m = ext.m();
    const BaseField& F = ext.base();
    for (;;) {
        std::vector<fq_elem> mat(std::size_t(m) * m);
        for (auto& v : mat) v = F.random(rng);
        std::vector<fq_elem> work = mat, inv;
        if (!gauss_inverse(F, work, m, inv)) continue;
        std::vector<ExtElem> elems(m, ext.zero());
        for (std::uint32_t j = 0; j < m; ++j)
            for (std::uint32_t i = 0; i < m; ++i) elems[j].c[i] = mat[std::size_t(i) * m + j];
        Basis b{ext, std::move(elems), std::move(mat), std::move(inv)};
        return b;
    }
}

std::vector<fq_elem> expand(const Basis& basis, const ExtElem& x) {
    const BaseField& F = basis.field.base();
    const std::uint32_t m = basis.field.m();
    std::vector<fq_elem> v(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        fq_elem acc = 0;
        for (std::uint32_t j = 0; j < m; ++j)
            if (x.c[j]) acc = F.add(acc, F.mul(basis.from_power[std::size_t(i) * m + j], x.c[j]));
        v[i] = acc;
    }
    return v;
}

ExtElem contract(const Basis& basis, const std::vector<fq_elem>& v) {
    const BaseField& F = basis.field.base();
    const std::uint32_t m = basis.field.m();
    if (v.size() != m) throw dimension_error("coordinate count mismatch");
    ExtElem x = basis.field.zero();
    for (std::uint32_t i = 0; i < m; ++i) {
        fq_elem acc = 0;
        for (std::uint32_t j = 0; j < m; ++j)
            if (v[j]) acc = F.add(acc, F.mul(basis.to_power[std::size_t(i) * m + j], v[j]));
        x.c[i] = acc;
    }
    return x;
}

Basis dual_basis(const Basis& basis) {
    const ExtField& ext = basis.field;
    const BaseField& F = ext.base();
    const std::uint32_t m = ext.m();
    // Gram matrix G_ij = Tr(g_i g_j); dual_j = sum_i (G^-1)_ij g_i
    std::vector<fq_elem> gram(std::size_t(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i; j < m; ++j) {
            fq_elem t = ext.trace(ext.mul(basis.elems[i], basis.elems[j]));
            gram[std::size_t(i) * m + j] = t;
            gram[std::size_t(j) * m + i] = t;
        }
    std::vector<fq_elem> ginv;
    if (!gauss_inverse(F, gram, m, ginv)) throw std::logic_error("singular trace form");
    std::vector<ExtElem> duals(m, ext.zero());
    for (std::uint32_t j = 0; j < m; ++j) {
        ExtElem acc = ext.zero();
        for (std::uint32_t i = 0; i < m; ++i) {
            const fq_elem cij = ginv[std::size_t(i) * m + j];
            if (cij) acc = ext.add(acc, ext.mul_scalar(basis.elems[i], cij));
        }
        duals[j] = acc;
    }
    return make_basis(ext, std::move(duals));
}

}  // namespace egmc
