// Copyright 2026 The twisted-thue authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tthue/arith.hpp"

#include <numeric>
#include <stdexcept>

#include "tthue/errors.hpp"

namespace tthue {

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

unsigned long valuation(const Int& n, const Int& p, Int* cofactor) {
  if (n == 0) throw Error(errc::internal, "valuation of zero");
  Int rest;
  unsigned long v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  if (cofactor) *cofactor = rest;
  return v;
}

bool is_probable_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant; n odd composite, not a prime power of interest.
  gmp_randstate_t st;
  gmp_randinit_mt(st);
  gmp_randseed_ui(st, 0x5eedu ^ static_cast<unsigned long>(mpz_fdiv_ui(n.get_mpz_t(), 1000003)));
  Int d = n;
  while (true) {
    Int c, x;
    mpz_urandomm(c.get_mpz_t(), st, n.get_mpz_t());
    mpz_urandomm(x.get_mpz_t(), st, n.get_mpz_t());
    if (c == 0) c = 1;
    Int y = x, q = 1;
    d = 1;
    unsigned long iter = 0;
    while (d == 1 && iter < 2000000) {
      ++iter;
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x - y;
      if (diff == 0) break;
      q = (q * abs(diff)) % n;
      if ((iter & 127) == 0) {
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (d != 1 && d != n) break;
        if (d == n) { d = 1; break; }
      }
    }
    mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    if (d != 1 && d != n) { gmp_randclear(st); return d; }
  }
}

void factor_into(const Int& n, std::map<Int, unsigned long>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  // perfect power short-circuit keeps rho away from p^k inputs
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Int, unsigned long> sub;
        factor_into(root, sub);
        for (auto& [p, e] : sub) out[p] += e * k;
        return;
      }
    }
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, unsigned long> factorize(const Int& n) {
  if (n == 0) throw Error(errc::internal, "factorize(0)");
  std::map<Int, unsigned long> out;
  Int m = abs(n);
  if (m == 1) return out;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    Int ip(static_cast<unsigned long>(p));
    if (m % ip == 0) {
      out[ip] = valuation(m, ip, &m);
    }
  }
  unsigned long p = 17;
  while (m > 1 && p < 100000) {
    Int ip(p);
    if (m % ip == 0) out[ip] = valuation(m, ip, &m);
    p += 2;
  }
  if (m > 1) factor_into(m, out);
  // defense in depth: re-multiply
  Int check = 1;
  for (auto& [q, e] : out) check *= int_pow(q, e);
  if (check != abs(n)) throw Error(errc::internal, "factorization mismatch");
  return out;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m, n = m;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned long> torsion_order_candidates(unsigned long d) {
  // phi(m) >= sqrt(m/2), so phi(m) | d and phi(m) <= d bounds m <= 2(d+1)^2.
  std::vector<unsigned long> out;
  for (unsigned long m = 1; m <= 2 * (d + 1) * (d + 1); ++m) {
    unsigned long ph = euler_phi(m);
    if (ph <= d && d % ph == 0) out.push_back(m);
  }
  return out;
}

Rat parse_exact_rational(const std::string& text) {
  if (text.empty()) throw Error(errc::parse_error, "empty rational literal");
  for (char ch : text) {
    if (!(ch == '/' || ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')))
      throw Error(errc::parse_error,
                  "rational literal must be \"p\" or \"p/q\", got \"" + text + "\"");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw Error(errc::parse_error, "bad rational literal \"" + text + "\"");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw Error(errc::parse_error, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  return q.get_str();
}

}  // namespace tthue
