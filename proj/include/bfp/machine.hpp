#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bfp {

// Minimal register machine over 4 unbounded registers.
//   INC r        increment register r
//   DEC r t      if R[r] > 0 decrement and fall through, else jump to t
//   HALT r       halt with output R[r]
// Falling off the end halts with output R0. One instruction is one step.
//
// Numbering (version "rm4g-1"): the bit stream of a program index e is the
// binary expansion of e+1 with the leading 1 removed, most significant bit
// first. Instructions are parsed greedily until the stream is exhausted;
// missing bits read as 0.
//   opcode: 0 0 -> INC, 0 1 -> DEC, 1 -> HALT
//   register: 2 bits
//   DEC target: Elias-gamma style (unary zero run k terminated by 1, then k
//   bits; value = 2^k + bits - 1), taken mod (#instructions + 1) at run time.
// Every natural number decodes to a syntactically valid program, so the
// numbering is total.

inline constexpr const char* kNumberingVersion = "rm4g-1";

enum class Op : uint8_t { Inc, Dec, Halt };

struct Instr {
  Op op;
  uint8_t reg;      // 0..3
  uint64_t target;  // DEC only, reduced mod (len+1) at execution
};

struct Program {
  std::vector<Instr> instrs;
  std::string disassemble() const;
};

Program decode_program(uint64_t index);

struct RunOutcome {
  bool halted;
  uint64_t output;  // meaningful iff halted
  friend bool operator==(const RunOutcome& a, const RunOutcome& b) {
    return a.halted == b.halted && (!a.halted || a.output == b.output);
  }
};

inline RunOutcome still_running() { return {false, 0}; }
inline RunOutcome halted(uint64_t out) { return {true, out}; }

// Deterministic, total, monotone in steps: once halted the outcome persists.
RunOutcome run_bounded(uint64_t index, uint64_t input, uint64_t steps);

// First halting step and output for the diagonal run e(e), searched up to
// max_steps; nullopt if still running at the bound.
struct HaltInfo {
  uint64_t step;
  uint64_t output;
};
std::optional<HaltInfo> diagonal_halt_info(uint64_t index, uint64_t max_steps);

// Small documented indices (verified by unit tests):
//   kIdentityProgram  : empty program, halts at once with output = input
//   kConstZeroProgram : HALT R1 - output 0 on every input
//   kConstOneProgram  : INC R1; HALT R1 - output 1 on every input
//   kLoopProgram      : DEC R1 -> 0 - never halts
inline constexpr uint64_t kIdentityProgram = 0;
inline constexpr uint64_t kConstZeroProgram = 12;
inline constexpr uint64_t kConstOneProgram = 433;
inline constexpr uint64_t kLoopProgram = 42;

}  // namespace bfp
