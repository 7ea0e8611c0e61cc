#pragma once

#include <forge/circuit.hpp>
#include <forge/cnf.hpp>
#include <forge/dtiwi.hpp>
#include <forge/pstring.hpp>

#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace forge
{

/// Simple undirected graph on vertices 0..v-1.
class graph
{
public:
  /// Throws `InvalidGraph` on self-loops or out-of-range endpoints.
  graph( std::size_t num_vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges );

  std::size_t num_vertices() const noexcept { return v_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  /// Edges as (u, w) with u < w, ascending.
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  bool adjacent( std::size_t u, std::size_t w ) const;

private:
  std::size_t v_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// DIMACS-like `p edge V E` followed by `e u w` lines (1-based).
graph parse_dimacs_graph( std::string_view text );

struct encoded
{
  pstring input;
  dtiwi_instance instance;
};

/// max(1, ceil(log2 v))
std::size_t id_bits( std::size_t num_vertices );

/*! \brief p^v followed by the clause list.
 *
 * Each literal is `1 s i` with s = 1 for negation and i the variable index
 * in max(1, ceil(log2 v)) bits; each clause ends with `0`.
 */
encoded encode_sat( const cnf& formula );

/// p^I followed by the bits of `serialize(c)`.
encoded encode_circuit_sat( const circuit& c );

/*! \brief p^{k b} followed by `0 id` per vertex and `1 u w` per edge.
 *
 * b = max(1, ceil(log2 v)). The length lies in [(v+e) b, 3 (v+e) b].
 * Throws `KOutOfRange` unless 1 <= k <= v.
 */
encoded encode_clique( const graph& g, std::size_t k );

/// Circuit over k b witness bits accepting exactly the ids of k-cliques.
circuit clique_gadget_circuit( const graph& g, std::size_t k );

/// Splits k b witness bits into k vertex ids (MSB first).
std::vector<std::size_t> decode_clique_witness( const bit_string& bits, std::size_t k, std::size_t bits_per_id );

/// First k-clique in lexicographic subset order.
std::optional<std::vector<std::size_t>> find_clique_by_subsets( const graph& g, std::size_t k );

} // namespace forge
