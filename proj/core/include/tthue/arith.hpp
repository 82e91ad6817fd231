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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tthue {

using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long e);
Int factorial(unsigned long n);

// p-adic valuation of n != 0; the cofactor n / p^v is written to *cofactor
// when non-null.
unsigned long valuation(const Int& n, const Int& p, Int* cofactor = nullptr);

bool is_probable_prime(const Int& n);

// Full factorization of |n| (n != 0) into prime -> multiplicity, primes
// ascending. Trial division backed by Pollard's rho; each returned prime
// passes a Miller-Rabin/BPSW test and the product is re-verified exactly.
std::map<Int, unsigned long> factorize(const Int& n);

unsigned long euler_phi(unsigned long m);

// All m >= 1 with euler_phi(m) dividing d: the possible orders of roots of
// unity in a degree-d number field.
std::vector<unsigned long> torsion_order_candidates(unsigned long d);

// Exact rational from "p/q" or "p" text. Throws Error(parse_error) on
// anything else (decimal points are rejected by design).
Rat parse_exact_rational(const std::string& text);
std::string to_string(const Rat& q);

}  // namespace tthue
