#ifndef KOPPEL_PARSE_HPP
#define KOPPEL_PARSE_HPP

#include "koppel/multipoly.hpp"

#include <nlohmann/json_fwd.hpp>

namespace koppel {

/// Parse a polynomial from the CLI syntax: variables z0..zN (mapped to
/// `lower`), Z0..ZN (its conjugate family), w0..wN; Gaussian-rational
/// coefficients "a/b", "a/b*i", "i"; operators + - * ^ and parentheses.
MultiPoly parse_poly(const VarSpace& vs, const std::string& text, Family lower = Family::Zeta);

nlohmann::json poly_to_json(const MultiPoly& p);
nlohmann::json rational_to_json(const RationalFn& r);

} // namespace koppel

#endif
