#pragma once
// High-precision reals. Exact rational arithmetic is used for all symbolic
// work; Real only enters at the final numeric evaluation step, so results at
// the default 78 digits are slack-free against 1e-9..1e-12 tolerances.

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>
#include <string>

namespace melonlab {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 78;

// Working precision in decimal digits. Reads MELONLAB_PRECISION once at
// startup (CLI may override with --precision). Applies to Reals created
// after the call.
void set_precision_digits(unsigned digits);
unsigned precision_digits();
void init_precision_from_env();

namespace detail {
// The bootstrap lives in the header (not a .cpp static) so it cannot be
// dropped by archive linking: every translation unit that uses Real anchors
// it. Namespace-scope Reals in other TUs may still construct first; keep
// such constants function-local.
inline const bool precision_bootstrap = (init_precision_from_env(), true);
} // namespace detail

inline Real to_real(const mpz_class& z) { return Real(z.get_mpz_t()); }
inline Real to_real(const mpq_class& q) { return Real(q.get_mpq_t()); }

// Fixed 12-significant-digit rendering used by the CLI (CSV/JSON contract).
std::string format_real(const Real& x, int digits = 12);

} // namespace melonlab
