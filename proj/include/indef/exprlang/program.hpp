#pragma once

// Flattens an expression tree into a postorder stack program so that batch
// kernels can evaluate it at many points without walking pointers. The
// instruction order matches the tree-walk evaluator exactly, so both paths
// perform the identical IEEE operation sequence per point.

#include <cstdint>
#include <vector>

#include "indef/exprlang/ast.hpp"

namespace indef::exprlang {

enum class OpCode : std::uint8_t {
  push_const,  // operand = constant-pool index
  load_t,
  load_s,
  load_x,  // operand = 0-based state index
  load_u,  // operand = 0-based input index
  neg,
  add,
  sub,
  mul,
  div,
  pow,
  sin,
  cos,
  abs,
  exp,
  ln,
  sqrt,
  min,
  max,
};

struct Instr {
  OpCode code;
  std::uint32_t operand = 0;
};

struct Program {
  std::vector<Instr> instrs;
  std::vector<double> constants;
  int max_stack = 0;
  // which inputs the program reads
  bool uses_t = false;
  bool uses_s = false;
  int max_x = 0;  // highest 1-based state index referenced, 0 if none
  int max_u = 0;
};

Program compile(const Expr& e);

}  // namespace indef::exprlang
