/*
 * Copyright 2026 The Ellipsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <mutex>
#include <utility>

#include "ellipsum/oracle.hpp"
#include "ellipsum/orthopoly.hpp"
#include "ellipsum/symfun.hpp"
#include "ellipsum/matrix.hpp"
#include "internal.hpp"

namespace ellipsum::identities {

namespace {

using detail::distribute_l;
using detail::for_each_decreasing;

Rat prod_factorials(unsigned from, unsigned to) {
  Rat p = 1;
  for (unsigned i = from; i <= to; ++i) p *= rat_factorial(i);
  return p;
}

// prod_{i<j} (a_i - a_j)^2 over the squares a = k^2.
Rat sq_vandermonde_sq(const std::vector<long>& ks) {
  Rat v = 1;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      const Rat d = Rat(ks[i] * ks[i] - ks[j] * ks[j]);
      v *= d * d;
    }
  }
  return v;
}

std::vector<Rat> with_trivial_term(std::vector<Rat> v) {
  if (!v.empty()) v[0] = 1;
  return v;
}

std::vector<Rat> classical_counts(std::string_view tag, long nmax) {
  const auto id = oracle::parse_classical_id(tag);
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  v[0] = 1;
  for (long n = 1; n <= nmax; ++n) v[static_cast<std::size_t>(n)] = Rat(oracle::divisor_count(id, n));
  return v;
}

std::vector<Rat> kmt1_counts(unsigned m, long nmax) {
  const long shift = static_cast<long>(m * m);
  std::vector<Rat> acc(static_cast<std::size_t>(2 * nmax + shift) + 1);
  const std::vector<int> odd(m, 1);
  const auto no_sign = [](std::size_t, long, long) { return 1; };
  for_each_decreasing(m, 1, static_cast<long>(acc.size()) - 1, [&](const std::vector<long>& ks) {
    Rat w = sq_vandermonde_sq(ks);
    for (long k : ks) {
      if (k % 2 == 0) return;
      w *= k;
    }
    distribute_l(ks, odd, no_sign, w, acc);
  });
  const Rat pref = 1 / (pow(Rat(4), static_cast<long>(m * (m - 1))) * prod_factorials(1, 2 * m - 1));
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  for (long n = 0; n <= nmax; ++n) v[static_cast<std::size_t>(n)] = pref * acc[static_cast<std::size_t>(2 * n + shift)];
  return v;
}

std::vector<Rat> kmt2_counts(unsigned m, long nmax) {
  const long shift = static_cast<long>(m * (m + 1) / 2);
  std::vector<Rat> acc(static_cast<std::size_t>(nmax + shift) + 1);
  const std::vector<int> odd(m, 1);
  const auto no_sign = [](std::size_t, long, long) { return 1; };
  for_each_decreasing(m, 1, static_cast<long>(acc.size()) - 1, [&](const std::vector<long>& ks) {
    Rat w = sq_vandermonde_sq(ks);
    for (long k : ks) w *= k * k * k;
    distribute_l(ks, odd, no_sign, w, acc);
  });
  const Rat pref = pow(Rat(2), static_cast<long>(m)) / prod_factorials(1, 2 * m);
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  for (long n = 0; n <= nmax; ++n) v[static_cast<std::size_t>(n)] = pref * acc[static_cast<std::size_t>(n + shift)];
  return v;
}

// The k_i are not ordered here; each index carries its own residue classes,
// so the sum factors into a product of one series per index.
std::vector<Rat> gm_counts(unsigned m, long nmax) {
  const long mod = 4 * static_cast<long>(m);
  const long shift = static_cast<long>(m * m);
  const long cap = mod * nmax + shift;
  std::vector<BigInt> prod(static_cast<std::size_t>(cap) + 1);
  prod[0] = 1;
  for (long i = 1; i <= static_cast<long>(m); ++i) {
    const long r = (2 * i - 1) % mod;
    const long neg = ((1 - 2 * i) % mod + mod) % mod;
    std::vector<long> g(static_cast<std::size_t>(cap) + 1, 0);
    for (long k = 1; k <= cap; k += 2) {
      const long kr = k % mod;
      if (kr != r && kr != neg) continue;
      const int sg = kr == neg ? -1 : 1;
      for (long l = 1; k * l <= cap; l += 2) g[static_cast<std::size_t>(k * l)] += sg;
    }
    std::vector<BigInt> next(prod.size());
    for (long a = 0; a <= cap; ++a) {
      const auto& pa = prod[static_cast<std::size_t>(a)];
      if (pa == 0) continue;
      for (long b = 1; a + b <= cap; ++b) {
        const long gb = g[static_cast<std::size_t>(b)];
        if (gb != 0) next[static_cast<std::size_t>(a + b)] += pa * gb;
      }
    }
    prod = std::move(next);
  }
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  for (long n = 0; n <= nmax; ++n) v[static_cast<std::size_t>(n)] = Rat(prod[static_cast<std::size_t>(mod * n + shift)]);
  return v;
}

std::vector<Rat> hti_counts(unsigned m, long nmax) {
  const long shift = static_cast<long>(m * m);
  std::vector<Rat> acc(static_cast<std::size_t>(4 * nmax + shift) + 1);
  const std::vector<int> odd(m, 1);
  const auto no_sign = [](std::size_t, long, long) { return 1; };
  const auto chi = [](long k) { return sign_pow((k - 1) / 2); };
  for_each_decreasing(m, 1, static_cast<long>(acc.size()) - 1, [&](const std::vector<long>& ks) {
    Rat w = 1;
    for (long k : ks) {
      if (k % 2 == 0) return;
      w *= chi(k);
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        const Rat d = Rat(chi(ks[j]) * ks[j] - chi(ks[i]) * ks[i]);
        w *= d * d;
      }
    }
    distribute_l(ks, odd, no_sign, w, acc);
  });
  Rat den = pow(Rat(4), static_cast<long>(m * (m - 1)));
  for (unsigned j = 1; j < m; ++j) den *= rat_factorial(j) * rat_factorial(j);
  const Rat pref = Rat(sign_pow(m * (m - 1) / 2)) / den;
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  for (long n = 0; n <= nmax; ++n) v[static_cast<std::size_t>(n)] = pref * acc[static_cast<std::size_t>(4 * n + shift)];
  return v;
}

std::vector<Rat> milne16_counts(long nmax) {
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  for (long n = 1; n <= nmax; ++n) {
    BigInt a = 0;
    for (long k = 1; k <= n; ++k) {
      if (n % k != 0) continue;
      const long l = n / k;
      a += BigInt(sign_pow((k - 1) * (l - 1))) * k * (1 + k * k + k * k * k * k);
    }
    v[static_cast<std::size_t>(n)] = Rat(32) / 3 * Rat(a);
  }
  std::vector<Rat> acc(static_cast<std::size_t>(nmax) + 1);
  const std::vector<int> any(2, -1);
  const auto sign = [](std::size_t, long k, long l) { return sign_pow((k - 1) * (l - 1)); };
  for_each_decreasing(2, 1, nmax, [&](const std::vector<long>& ks) {
    const Rat w = sq_vandermonde_sq(ks) * ks[0] * ks[1];
    distribute_l(ks, any, sign, w, acc);
  });
  for (long n = 1; n <= nmax; ++n) v[static_cast<std::size_t>(n)] += Rat(256) / 3 * acc[static_cast<std::size_t>(n)];
  return v;
}

int eps_of(std::string_view tag) {
  return tag.size() >= 4 && tag.substr(tag.size() - 4) == "_oct" ? 1 : 0;
}

std::vector<Rat> sst_counts(int eps, unsigned m, long nmax) {
  std::vector<Rat> acc(static_cast<std::size_t>(nmax) + 1);
  const auto sign = [eps](std::size_t, long k, long l) {
    return eps == 0 ? sign_pow((k - 1) * (l - 1)) : sign_pow(k * (l - 1));
  };
  for (unsigned s = 1; s <= m; ++s) {
    const std::vector<int> any(s, -1);
    for_each_decreasing(s, 1, nmax, [&](const std::vector<long>& ks) {
      std::vector<Rat> pts;
      Rat w = pow(Rat(4), static_cast<long>(s)) * sq_vandermonde_sq(ks);
      for (long k : ks) {
        w *= eps == 0 ? Rat(k) : Rat(k * k * k);
        pts.push_back(Rat(-k * k));
      }
      w *= orthopoly::correlation_eval(eps, m, pts, orthopoly::Route::cd);
      distribute_l(ks, any, sign, w, acc);
    });
  }
  return acc;
}

std::vector<std::vector<long>> box_partitions(std::size_t rows, long width) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  const std::function<void(long)> rec = [&](long bound) {
    if (cur.size() == rows) {
      out.push_back(cur);
      return;
    }
    for (long v = bound; v >= 0; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(width);
  return out;
}

std::vector<Rat> mt_counts(int eps, unsigned m, long nmax) {
  const auto t = orthopoly::tangent_numbers(2 * m + 1);
  std::vector<Rat> acc(static_cast<std::size_t>(nmax) + 1);
  const auto sign = [eps](std::size_t, long k, long l) {
    return eps == 0 ? sign_pow((k - 1) * (l - 1)) : sign_pow(k * (l - 1));
  };
  for (unsigned s = 1; s <= m; ++s) {
    const auto parts = box_partitions(s, static_cast<long>(m - s));
    // Complementary minors of (t_{i+j-1+eps}) for every pair of partitions.
    const auto complement = [&](const std::vector<long>& lam) {
      std::vector<long> idx;
      for (long i = 1; i <= static_cast<long>(m); ++i) {
        bool in_s = false;
        for (std::size_t k = 0; k < s; ++k) in_s = in_s || lam[k] + static_cast<long>(s) - static_cast<long>(k) == i;
        if (!in_s) idx.push_back(i);
      }
      return idx;
    };
    std::vector<std::vector<Rat>> minor(parts.size(), std::vector<Rat>(parts.size()));
    for (std::size_t a = 0; a < parts.size(); ++a) {
      const auto rows = complement(parts[a]);
      for (std::size_t b = 0; b < parts.size(); ++b) {
        const auto cols = complement(parts[b]);
        linalg::RatMatrix sub(rows.size(), Rat(0));
        for (std::size_t i = 0; i < rows.size(); ++i) {
          for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = t[static_cast<std::size_t>(rows[i] + cols[j] - 1 + eps)];
        }
        minor[a][b] = rows.empty() ? Rat(1) : linalg::determinant(sub);
      }
    }
    const std::vector<int> any(s, -1);
    for_each_decreasing(s, 1, nmax, [&](const std::vector<long>& ks) {
      std::vector<Rat> xs;
      Rat w = pow(Rat(4), static_cast<long>(s)) * sq_vandermonde_sq(ks);
      for (long k : ks) {
        w *= eps == 0 ? Rat(k) : Rat(k * k * k);
        xs.push_back(Rat(k * k));
      }
      std::vector<Rat> sl(parts.size());
      for (std::size_t a = 0; a < parts.size(); ++a) sl[a] = symfun::schur_eval(parts[a], xs);
      Rat inner = 0;
      for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = 0; b < parts.size(); ++b) inner += minor[a][b] * sl[a] * sl[b];
      }
      distribute_l(ks, any, sign, w * inner, acc);
    });
  }
  const Rat pref = pow(Rat(2), static_cast<long>(m * (2 * m - 1 + 2 * eps))) / prod_factorials(1, 2 * m - 1 + eps);
  for (auto& x : acc) x *= pref;
  return acc;
}

Rat schur_P_or_one(int eps, long t, const std::vector<Rat>& pts) {
  if (t == 0 || pts.empty()) return 1;
  return orthopoly::schur_type_P(eps, static_cast<unsigned>(t), pts);
}

std::vector<Rat> hsf_counts(unsigned m, long nmax) {
  std::vector<Rat> total(static_cast<std::size_t>(nmax) + 1);
  const long mm = m;
  for (long s0 = 0; s0 <= mm; ++s0) {
    for (long s1 = 0; s0 + 2 * s1 <= mm; ++s1) {
      for (long s2 = 0; s2 <= s1; ++s2) {
        if (s0 + s1 + s2 == 0) continue;
        const int eps = (mm - s0) % 2 == 0 ? 0 : 1;
        const long t0 = s0 / 2, t1 = (mm - s0 - 2 * s1) / 2, t2 = (mm - s0 - 2 * s2) / 2;
        const long a = s0 + 2 * s1, b = s0 + 2 * s2;
        Rat pref = Rat(sign_pow((mm + 1) * (s1 + s2)) * (s1 == s2 ? 1 : 2)) *
                   pow(Rat(2), (s0 + s1 + s2) * (2 * mm + 1) - (a * a + b * b) / 2);
        for (long i = 1; i <= a; ++i) pref /= rat_factorial(static_cast<unsigned>(mm - i));
        for (long i = 1; i <= b; ++i) pref /= rat_factorial(static_cast<unsigned>(mm - i));

        std::vector<int> parity;
        for (long i = 0; i < s0; ++i) parity.push_back(1);
        for (long i = 0; i < s1 + s2; ++i) parity.push_back(0);
        const auto sign = [s0](std::size_t i, long k, long l) {
          if (static_cast<long>(i) < s0) return sign_pow((l - 1) / 2);
          return sign_pow(k + l / 2);
        };
        std::vector<Rat> acc(total.size());
        for_each_decreasing(static_cast<std::size_t>(t0), 1, nmax, [&](const std::vector<long>& ka) {
          long used = 0;
          for (long k : ka) used += k;
          for_each_decreasing(static_cast<std::size_t>(s0 - t0), 1, nmax - used, [&](const std::vector<long>& kb) {
            long used_b = used;
            for (long k : kb) used_b += k;
            for_each_decreasing(static_cast<std::size_t>(s1), 1, (nmax - used_b) / 2, [&](const std::vector<long>& kp) {
              long used_p = used_b;
              for (long k : kp) used_p += 2 * k;
              for_each_decreasing(static_cast<std::size_t>(s2), 1, (nmax - used_p) / 2, [&](const std::vector<long>& kpp) {
                std::vector<long> k0 = ka;
                k0.insert(k0.end(), kb.begin(), kb.end());
                Rat w = 1;
                for (std::size_t i = 0; i < ka.size(); ++i) w *= pow(Rat(ka[i]), 2 + 2 * eps);
                for (std::size_t i = 0; i < kb.size(); ++i) w *= pow(Rat(kb[i]), 2 * eps);
                for (long k : kp) w *= pow(Rat(k), 1 + 2 * eps);
                for (long k : kpp) w *= pow(Rat(k), 1 + 2 * eps);
                w *= sq_vandermonde_sq(ka) * sq_vandermonde_sq(kb) * sq_vandermonde_sq(kp) * sq_vandermonde_sq(kpp);
                for (long k : k0) {
                  for (long kk : kp) w *= Rat(k * k - kk * kk);
                  for (long kk : kpp) w *= Rat(k * k - kk * kk);
                }
                if (w == 0) return;
                std::vector<Rat> pts1, pts2;
                for (long k : k0) {
                  pts1.push_back(Rat(-k * k));
                  pts2.push_back(Rat(-k * k));
                }
                for (long k : kp) pts1.insert(pts1.end(), 2, Rat(-k * k));
                for (long k : kpp) pts2.insert(pts2.end(), 2, Rat(-k * k));
                w *= schur_P_or_one(eps, t1, pts1) * schur_P_or_one(eps, t2, pts2);
                if (w == 0) return;
                std::vector<long> ks = k0;
                ks.insert(ks.end(), kp.begin(), kp.end());
                ks.insert(ks.end(), kpp.begin(), kpp.end());
                distribute_l(ks, parity, sign, w, acc);
              });
            });
          });
        });
        for (std::size_t n = 0; n < total.size(); ++n) total[n] += pref * acc[n];
      }
    }
  }
  return total;
}

struct CacheKey {
  std::string tag;
  unsigned m;
  bool operator<(const CacheKey& o) const { return std::tie(tag, m) < std::tie(o.tag, o.m); }
};

std::mutex cache_mutex;
std::map<CacheKey, std::vector<Rat>>& cache() {
  static std::map<CacheKey, std::vector<Rat>> c;
  return c;
}

bool is_classical(std::string_view tag) {
  return tag.size() == 2 && (tag[0] == 's' || tag[0] == 't') && (tag[1] >= '2' && tag[1] <= '8');
}

void check_m(std::string_view tag, unsigned m) {
  long hi = 3;
  if (tag == "kmt1" || tag == "kmt2") hi = 2;
  detail::require_range("m", m, 1, hi);
}

std::vector<Rat> compute_counts(std::string_view tag, unsigned m, long nmax) {
  if (is_classical(tag)) return classical_counts(tag, nmax);
  if (tag == "milne16") return milne16_counts(nmax);
  check_m(tag, m);
  if (tag == "kmt1") return kmt1_counts(m, nmax);
  if (tag == "kmt2") return kmt2_counts(m, nmax);
  if (tag == "gm") return gm_counts(m, nmax);
  if (tag == "hti") return hti_counts(m, nmax);
  if (tag == "sst_sq" || tag == "sst_oct") return sst_counts(eps_of(tag), m, nmax);
  if (tag == "mt_sq" || tag == "mt_oct") return mt_counts(eps_of(tag), m, nmax);
  if (tag == "hsf") return hsf_counts(m, nmax);
  throw Error(ErrorCode::UnknownIdentity, "not a count identity: " + std::string(tag));
}

long nmax_cap(std::string_view tag) {
  if (is_classical(tag)) return 20000;
  if (tag == "hsf") return 500;
  if (tag == "sst_sq" || tag == "sst_oct" || tag == "mt_sq" || tag == "mt_oct" || tag == "hti") return 200;
  return 400;
}

}  // namespace

bool is_count_tag(std::string_view tag) {
  static const char* const tags[] = {"s2",   "s4",   "s8", "t2",  "t4",      "t8",     "kmt1",  "kmt2",
                                     "gm",   "hti",  "milne16", "sst_sq", "sst_oct", "mt_sq", "mt_oct", "hsf"};
  return std::any_of(std::begin(tags), std::end(tags), [&](const char* t) { return tag == t; });
}

bool count_tag_is_squares(std::string_view tag) {
  if (!is_count_tag(tag)) throw Error(ErrorCode::UnknownIdentity, "not a count identity: " + std::string(tag));
  return !(tag[0] == 't' || tag == "kmt1" || tag == "kmt2" || tag == "gm" || tag == "hti");
}

unsigned count_tag_summands(std::string_view tag, unsigned m) {
  if (!is_count_tag(tag)) throw Error(ErrorCode::UnknownIdentity, "not a count identity: " + std::string(tag));
  if (is_classical(tag)) return static_cast<unsigned>(tag[1] - '0');
  if (tag == "milne16") return 16;
  if (tag == "kmt1") return 4 * m * m;
  if (tag == "kmt2") return 4 * m * (m + 1);
  if (tag == "gm") return 2 * m;
  if (tag == "hti" || tag == "hsf") return 2 * m * m;
  return eps_of(tag) == 0 ? 4 * m * m : 4 * m * (m + 1);
}

std::vector<Rat> formula_counts(std::string_view tag, unsigned m, long nmax) {
  if (!is_count_tag(tag)) throw Error(ErrorCode::UnknownIdentity, "not a count identity: " + std::string(tag));
  detail::require_range("nmax", nmax, 0, nmax_cap(tag));
  const bool uses_m = !(is_classical(tag) || tag == "milne16");
  const CacheKey key{std::string(tag), uses_m ? m : 0};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    const auto it = cache().find(key);
    if (it != cache().end() && static_cast<long>(it->second.size()) > nmax) {
      return std::vector<Rat>(it->second.begin(), it->second.begin() + nmax + 1);
    }
  }
  auto v = with_trivial_term(compute_counts(tag, m, nmax));
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = cache()[key];
  if (slot.size() < v.size()) slot = v;
  return v;
}

Rat count_via_formula(std::string_view tag, unsigned m, long n) {
  detail::require_range("n", n, 1, nmax_cap(tag));
  return formula_counts(tag, m, n)[static_cast<std::size_t>(n)];
}

namespace {

struct KL {
  long k, l, w;
};

std::vector<KL> pairs_with_parity(long nmax, int odd) {
  std::vector<KL> out;
  for (long k = 1; k <= nmax; ++k) {
    for (long l = odd ? 1 : 2; k * l <= nmax; l += 2) out.push_back({k, l, k * l});
  }
  std::sort(out.begin(), out.end(), [](const KL& a, const KL& b) { return std::tie(a.w, a.k) < std::tie(b.w, b.k); });
  return out;
}

std::vector<Rat> single_sum(long nmax, int odd, const std::function<Rat(const KL&)>& f) {
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  for (const auto& p : pairs_with_parity(nmax, odd)) v[static_cast<std::size_t>(p.w)] += f(p);
  return v;
}

std::vector<Rat> convolve(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) {
      if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

void add_scaled(std::vector<Rat>& acc, const Rat& c, const std::vector<Rat>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

std::vector<Rat> q_coeffs(const core::QSeries& f, long nmax) {
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  for (long n = 0; n <= nmax; ++n) v[static_cast<std::size_t>(n)] = f.q_coeff(static_cast<int>(n));
  return v;
}

int odd_sign(long l) { return sign_pow((l - 1) / 2); }

std::vector<Rat> eighteen_squares(long nmax, bool cross_factors) {
  const auto odd = pairs_with_parity(nmax, 1);
  const auto even = pairs_with_parity(nmax, 0);
  const Rat half(1, 2);
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  const auto e3 = single_sum(nmax, 0, [](const KL& p) { return Rat(sign_pow(p.k + p.l / 2) * p.k * p.k * p.k); });
  add_scaled(v, 32, e3);
  add_scaled(v, 16, single_sum(nmax, 1, [&](const KL& p) -> Rat {
               const Rat a = Rat(p.k * p.k) + half;
               return Rat(odd_sign(p.l)) * a * a;
             }));
  add_scaled(v, 256, convolve(e3, e3));
  for (const auto& a : odd) {
    for (const auto& b : even) {
      if (a.w + b.w > nmax) break;
      Rat t = Rat(odd_sign(a.l) * sign_pow(b.k - 1 + b.l / 2)) * (Rat(a.k * a.k) + half) * b.k;
      if (cross_factors) t *= Rat(a.k * a.k - b.k * b.k);
      v[static_cast<std::size_t>(a.w + b.w)] += 256 * t;
    }
  }
  const auto h4 = single_sum(nmax, 1, [](const KL& p) { return Rat(odd_sign(p.l) * p.k * p.k * p.k * p.k); });
  const auto h2 = single_sum(nmax, 1, [](const KL& p) { return Rat(odd_sign(p.l) * p.k * p.k); });
  add_scaled(v, 256, convolve(h4, h2));
  for (const auto& a : odd) {
    for (const auto& b : even) {
      if (a.w + b.w > nmax) break;
      for (const auto& c : even) {
        if (a.w + b.w + c.w > nmax) break;
        Rat t = Rat(odd_sign(a.l) * sign_pow(b.k + b.l / 2 + c.k + c.l / 2) * b.k * c.k);
        if (cross_factors) t *= Rat(a.k * a.k - b.k * b.k) * Rat(a.k * a.k - c.k * c.k);
        v[static_cast<std::size_t>(a.w + b.w + c.w)] += 1024 * t;
      }
    }
  }
  for (const auto& a : odd) {
    for (const auto& b : odd) {
      if (a.w + b.w > nmax) break;
      for (const auto& c : odd) {
        if (a.w + b.w + c.w > nmax) break;
        if (b.k <= c.k) continue;
        const Rat d = Rat(b.k * b.k - c.k * c.k);
        v[static_cast<std::size_t>(a.w + b.w + c.w)] +=
            1024 * Rat(odd_sign(a.l) * odd_sign(b.l) * odd_sign(c.l) * a.k * a.k) * d * d;
      }
    }
  }
  v[0] = 1;
  return v;
}

}  // namespace

std::vector<Rat> hsf_eight_squares_display(long nmax) {
  detail::require_range("nmax", nmax, 0, 2000);
  std::vector<Rat> v(static_cast<std::size_t>(nmax) + 1);
  const auto g = single_sum(nmax, 0, [](const KL& p) { return Rat(sign_pow(p.k + p.l / 2) * p.k); });
  const auto h2 = single_sum(nmax, 1, [](const KL& p) { return Rat(odd_sign(p.l) * p.k * p.k); });
  const auto h0 = single_sum(nmax, 1, [](const KL& p) { return Rat(odd_sign(p.l)); });
  add_scaled(v, -16, g);
  add_scaled(v, 16, h2);
  add_scaled(v, 64, convolve(g, g));
  add_scaled(v, 64, convolve(h2, h0));
  v[0] = 1;
  return v;
}

std::vector<Rat> hsf_eight_squares_lambert(long nmax) {
  detail::require_range("nmax", nmax, 0, 2000);
  const int n = static_cast<int>(nmax);
  using core::LambertSpec;
  using core::LambertTwist;
  LambertSpec a_spec;
  a_spec.weight = 1;
  a_spec.numerator_step = 2;
  a_spec.denominator_step = 2;
  a_spec.twist = LambertTwist::alt_k;
  LambertSpec b_spec;
  b_spec.weight = 2;
  b_spec.denominator_step = 2;
  LambertSpec c_spec;
  c_spec.denominator_step = 2;
  const auto a = core::lambert_sum(a_spec, n);
  const auto b = core::lambert_sum(b_spec, n);
  const auto c = core::lambert_sum(c_spec, n);
  core::QSeries f = core::QSeries::one(a.order());
  f += Rat(16) * a + Rat(16) * b + Rat(64) * (a * a) + Rat(64) * (b * c);
  return q_coeffs(f, nmax);
}

std::vector<Rat> hsf_eighteen_squares_display(long nmax) {
  detail::require_range("nmax", nmax, 0, 500);
  return eighteen_squares(nmax, false);
}

namespace detail {

namespace {

std::vector<Rat> oracle_counts(bool squares, unsigned k, long nmax) {
  const auto c = oracle::rep_counts(squares ? oracle::RepKind::squares : oracle::RepKind::triangles, k,
                                    static_cast<int>(nmax));
  return std::vector<Rat>(c.begin(), c.end());
}

std::vector<Rat> eight_squares_jacobi(long nmax) {
  const int n = static_cast<int>(nmax);
  const auto box = oracle::base_series(oracle::RepKind::squares, n);
  const auto tri = oracle::base_series(oracle::RepKind::triangles, n);
  const auto box_neg_q2 = box.substitute_q(2, -1).truncated(box.order());
  const auto tri_q2 = tri.substitute_q(2, 1).truncated(box.order());
  auto f = core::series_pow(box_neg_q2, 8);
  f += Rat(16) * (core::series_pow(tri_q2, 4) * core::series_pow(box, 4)).shifted_up(2).truncated(box.order());
  return q_coeffs(f, nmax);
}

}  // namespace

std::vector<VerifyReport> run_count_row(std::string_view tag, const json& p) {
  const std::string id(tag);
  const long nmax = get_long(p, "nmax");
  require_range("nmax", nmax, 1, nmax_cap(tag));
  std::vector<VerifyReport> out;
  if (is_classical(tag) || tag == "milne16") {
    const bool squares = tag[0] != 't';
    const auto oracle = oracle_counts(squares, count_tag_summands(tag, 0), nmax);
    out.push_back(compare_values(id, {{"nmax", nmax}}, formula_counts(tag, 0, nmax), oracle, 1, nmax));
    if (tag == "s4") {
      std::vector<Rat> twisted(static_cast<std::size_t>(nmax) + 1, Rat(1));
      for (long n = 1; n <= nmax; ++n) twisted[static_cast<std::size_t>(n)] = Rat(oracle::s4_twisted(n));
      out.push_back(compare_values(id, {{"nmax", nmax}, {"form", "twisted"}}, twisted, oracle, 1, nmax));
    }
    return out;
  }
  const long m = get_long(p, "m");
  check_m(tag, static_cast<unsigned>(std::max(0L, m)));
  const unsigned mu = static_cast<unsigned>(m);
  const auto oracle = oracle_counts(count_tag_is_squares(tag), count_tag_summands(tag, mu), nmax);
  const auto form = [&](const char* name) { return json{{"m", m}, {"nmax", nmax}, {"form", name}}; };
  if (tag == "hsf") {
    if (m == 1) {
      out.push_back(compare_values(id, form("two_squares_divisor_sum"), formula_counts(tag, 1, nmax),
                                   classical_counts("s2", nmax), 1, nmax));
    } else if (m == 2) {
      out.push_back(compare_values(id, form("eight_squares_display"), hsf_eight_squares_display(nmax), oracle, 1, nmax));
      out.push_back(compare_values(id, form("eight_squares_lambert"), hsf_eight_squares_lambert(nmax), oracle, 1, nmax));
      out.push_back(compare_values(id, form("eight_squares_jacobi"), eight_squares_jacobi(nmax), oracle, 1, nmax));
    } else if (m == 3) {
      out.push_back(
          compare_values(id, form("eighteen_squares_display"), hsf_eighteen_squares_display(nmax), oracle, 1, nmax));
      out.push_back(compare_values(id, form("eighteen_squares_display_cross_factors"), eighteen_squares(nmax, true),
                                   oracle, 1, nmax));
    }
  }
  out.push_back(compare_values(id, {{"m", m}, {"nmax", nmax}}, formula_counts(tag, mu, nmax), oracle, 1, nmax));
  return out;
}

}  // namespace detail

}  // namespace ellipsum::identities
