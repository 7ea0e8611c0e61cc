#pragma once

#include <forge/cnf.hpp>
#include <forge/pstring.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace forge
{

enum class gate_kind : std::uint8_t
{
  input,
  constant,
  not_gate,
  and_gate,
  or_gate
};

/// 3-bit opcodes of the binary format. The low two bits select the field
/// layout: 00 two operands, 01 one operand or input index, 10 one bit.
namespace opcode
{
constexpr unsigned and_gate = 0b000;
constexpr unsigned or_gate = 0b100;
constexpr unsigned input = 0b001;
constexpr unsigned not_gate = 0b101;
constexpr unsigned constant = 0b010;
} // namespace opcode

struct gate
{
  gate_kind kind;
  std::uint32_t a = 0; ///< operand, input index, or constant value
  std::uint32_t b = 0;

  friend bool operator==( const gate&, const gate& ) = default;
};

/*! \brief Bounded fan-in Boolean circuit with a single output.
 *
 * Nodes are stored in topological order with strictly backward operand
 * references; the output is the last node. Every input index is below
 * `num_inputs()` and occurs at most once; declared inputs may be unused.
 */
class circuit
{
public:
  /// Throws `InvalidCircuit`, `ForwardReference` or `BadInputIndex`.
  circuit( std::vector<gate> nodes, std::size_t num_inputs );

  const std::vector<gate>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::uint32_t output() const noexcept { return static_cast<std::uint32_t>( nodes_.size() - 1 ); }
  /// Gate count m: every non-input node, constants included.
  std::size_t num_gates() const noexcept { return num_gates_; }

  friend bool operator==( const circuit&, const circuit& ) = default;

private:
  std::vector<gate> nodes_;
  std::size_t num_inputs_;
  std::size_t num_gates_ = 0;
};

/// Throws `AssignmentLengthMismatch`.
bool evaluate( const circuit& c, const bit_string& assignment );

/*! \brief Bit-parallel evaluation of 64 assignments.
 *
 * `input_words[i]` holds the value of input i in each of the 64 lanes.
 * `scratch` is resized as needed and may be reused across calls.
 */
std::uint64_t evaluate_lanes( const circuit& c, std::span<const std::uint64_t> input_words,
                              std::vector<std::uint64_t>& scratch );

/// Fixes some inputs; the remaining ones are renumbered densely in order.
/// Constants are folded and dead nodes removed. Throws `BadInputIndex`.
circuit specialize( const circuit& c, const std::map<std::size_t, bool>& partial );

struct circuit_stats
{
  std::size_t gates;
  std::size_t inputs;
  std::size_t depth;
};

circuit_stats stats( const circuit& c );

/// Field width of the binary format: ceil(log2(max(nodes, inputs))).
std::size_t operand_width( std::size_t num_nodes, std::size_t num_inputs );
/// Exact bit length of the binary format before byte padding (header included).
std::size_t serialized_bits( const circuit& c );

/*! \brief Binary format.
 *
 * Header: node count and input count as 32-bit big-endian integers. Then per
 * node, MSB-first: 3-bit opcode and its fields of width W = operand_width
 * (two for AND/OR, one for NOT, one input index for INPUT, one bit for
 * CONST). Zero padding to a byte boundary only at the end.
 */
std::vector<std::uint8_t> serialize( const circuit& c );
/// Throws `MalformedHeader`, `DanglingReference`, `ForwardReference`,
/// `BadOpcode`, `TruncatedPayload` or `DuplicateInput`.
circuit deserialize( std::span<const std::uint8_t> bytes );

/// Text format: `inputs: N`, lines `g7 = AND g3 g5` (INPUT i, CONST b, NOT,
/// AND, OR), optional `output: g7`. Throws `ParseError`.
circuit parse_circuit_text( std::string_view text );
std::string to_text( const circuit& c );

/// One OR per clause over (possibly negated) inputs, AND over clauses.
/// An empty clause becomes CONST(0).
circuit cnf_to_circuit( const cnf& formula );

/*! \brief Incremental circuit construction.
 *
 * With folding enabled, gates are hash-consed and simplified on the fly
 * (constant absorption, idempotence, complements, double negation).
 */
class circuit_builder
{
public:
  using signal = std::uint32_t;

  explicit circuit_builder( std::size_t num_inputs, bool fold = true );

  signal input( std::size_t index );
  signal constant( bool value );
  signal not_( signal a );
  signal and_( signal a, signal b );
  signal or_( signal a, signal b );
  signal xor_( signal a, signal b );
  /// sel ? then_ : else_
  signal mux( signal sel, signal then_, signal else_ );
  signal and_all( std::span<const signal> xs );
  signal or_all( std::span<const signal> xs );

  bool is_constant( signal s, bool value ) const;
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Keeps the nodes reachable from `output` (or all, without pruning).
  circuit build( signal output, bool prune = true ) const;

private:
  signal add( gate g );

  std::size_t num_inputs_;
  bool fold_;
  std::vector<gate> nodes_;
  std::unordered_map<std::uint64_t, signal> strash_;
  std::vector<signal> inputs_;
  signal const_[2];
};

} // namespace forge
