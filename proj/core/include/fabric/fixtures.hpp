#pragma once

// Workload generators: the small CGGI circuits used for packing regression,
// textbook arithmetic circuits with integer oracles, and CKKS kernels.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "fabric/circuit.hpp"

namespace fabric::fixtures {

// 4 independent And gates over 8 arguments.
CircuitGraph and_gate();
// (sum, carry) = (a xor b, a and b)
CircuitGraph half_adder();
// (sum, carry_out) over (a, b, carry_in)
CircuitGraph full_adder();
// Arguments a0..a{n-1}, b0..b{n-1} (LSB first); returns n+1 sum bits.
CircuitGraph ripple_adder(std::size_t n);
// Arguments a0..a{n-1}, b0..b{n-1}; returns the 2n-bit product.
CircuitGraph array_mult(std::size_t n);
// One Lut2 feeding one Lut3.
CircuitGraph lut_canonicalize();
// 44 And, 44 Nand, 18 XNor, 35 Xor in a layered chain. Structurally valid,
// not an arithmetic circuit.
CircuitGraph table3_mult8();

// Slot 0 (and every slot after the final extract) holds sum_i x[i] * w[i]
// for i < n. Arguments: %x : !ct, %w : !pt.
CircuitGraph ckks_dot_product(std::size_t n);
// 3x3 box sum over a k x k image packed row-major into k*k slots; the
// neighbourhood is taken by rotating the flattened vector, so it wraps
// across row ends and the image edges.
CircuitGraph ckks_box_blur(std::size_t k);
// Every slot holds the sum of all n slots (n a power of two, slots = n).
CircuitGraph ckks_simple_sum(std::size_t n);

std::span<const std::string_view> names();

// Dispatch by name; `size` parameterises the sized fixtures (defaults: 8,
// or 4 for ckks-box-blur). Throws Error for unknown names or size < 1.
CircuitGraph generate(std::string_view name, std::optional<std::size_t> size = std::nullopt);

}  // namespace fabric::fixtures
