#pragma once

#include <string>
#include <string_view>

#include "qpnet/multilinear.hpp"
#include "qpnet/qp.hpp"

namespace qpnet {

/// Text notation for quasi-probabilities.
///
///   Raw      monomials as `p*q*r`, all groups in parentheses:
///            `1-(1-p*q*r*s)*(1-q*t*u)`
///   Compact  monomials juxtaposed, group brackets cycle ( [ { by nesting
///            depth: `q[1-(1-prs)(1-tu)]`
///
/// In both styles `*` is the weak product and juxtaposition the ordinary
/// product of unrelated factors. Atom names of the form letter followed by
/// digits or primes print bare; other names print back-quoted (`` `x_1` ``).
/// Factors are ordered monomial first, then by their text; sum terms put
/// the constant first, then positive terms, then negative ones.
enum class TextStyle { Raw, Compact };

std::string to_string(const Qp& e, TextStyle style = TextStyle::Compact);
std::string to_string(const MultilinearForm& f,
                      TextStyle style = TextStyle::Compact);

/// Parses either style. Juxtaposition binds tighter than `*`, which binds
/// tighter than `+`/`-`. Juxtaposed factors that share an atom are a
/// ParseError. `−` and `∗` are accepted for `-` and `*`.
Qp parse_qp(std::string_view text);

}  // namespace qpnet
