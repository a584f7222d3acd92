#pragma once

// Standalone Iwahori-Hecke algebra H_n(u) and its Ocneanu trace, written
// without the library's algebra or trace code. Products use the left
// multiplication rule; the trace finds a reduced factorization
// w = a s_{n-1} b by exhaustive search and applies the trace rules literally.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Polynomial in u and z with integer exponents: (u_exp, z_exp) -> coefficient.
using UZ = std::map<std::pair<int, int>, mpq_class>;

using OPerm = std::vector<int>;  // one-line, values 0..n-1
using Element = std::map<OPerm, UZ>;

UZ uz_add(const UZ& a, const UZ& b);
UZ uz_mul(const UZ& a, const UZ& b);
UZ uz_const(const mpq_class& c);
UZ uz_monomial(const mpq_class& c, int u_exp, int z_exp);

Element identity(int n);
Element h(int n, int i);        // generator h_i, 1-based
Element h_inverse(int n, int i);
Element multiply(const Element& a, const Element& b, int n);
Element add(const Element& a, const Element& b);
Element scale(const Element& a, const UZ& c);

UZ trace(const Element& a, int n);

// "s1 -s2 ..." into H_n.
Element from_word(const std::string& word, int n);

std::string to_string(const UZ& p);

}  // namespace oracle
