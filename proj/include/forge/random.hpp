#pragma once

#include <forge/circuit.hpp>
#include <forge/cnf.hpp>
#include <forge/encoders.hpp>
#include <forge/pstring.hpp>

#include <cstdint>
#include <random>

namespace forge
{

using rng = std::mt19937_64;

/// Every input appears once; gates pick random earlier operands.
circuit random_circuit( rng& gen, std::size_t inputs, std::size_t gates );

cnf random_cnf( rng& gen, std::size_t vars, std::size_t clauses, std::size_t width );

/// G(v, p) with edge probability `percent` / 100.
graph random_graph( rng& gen, std::size_t v, unsigned percent );

/// Length `length` with exactly `placeholders` placeholders.
pstring random_pstring( rng& gen, std::size_t length, std::size_t placeholders );

} // namespace forge
