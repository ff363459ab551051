#pragma once

#include <cstddef>

#include "dsop/interval.hpp"
#include "dsop/poly.hpp"

namespace dsop {

/// Whether finite endpoints of the interval are counted.
enum class Endpoints { closed, open };

/// Number of distinct real roots of p in the interval (Sturm sequence of the
/// squarefree part). Throws PreconditionError for the zero polynomial.
std::size_t sturm_count(const QPoly& p, const ExtInterval& interval,
                        Endpoints endpoints = Endpoints::closed);

/// Number of roots of odd multiplicity in the open interior of the interval,
/// i.e. the places where p changes sign there.
std::size_t sign_change_count(const QPoly& p, const ExtInterval& interval);

/// Real roots in the interval counted with multiplicity.
std::size_t zeros_total_count(const QPoly& p, const ExtInterval& interval,
                              Endpoints endpoints = Endpoints::closed);

}  // namespace dsop
