#include "bfp/machine.hpp"

#include <sstream>

namespace bfp {

namespace {

struct BitStream {
  uint64_t word;  // e+1
  int pos;        // index of next bit, MSB-first, excluding the leading 1

  explicit BitStream(uint64_t index) {
    word = index + 1;
    int top = 63;
    while (top > 0 && !((word >> top) & 1)) --top;
    pos = top - 1;  // bits below the leading 1
  }
  bool exhausted() const { return pos < 0; }
  int read() {  // missing bits read as 0
    if (pos < 0) return 0;
    return (word >> pos--) & 1;
  }
};

}  // namespace

Program decode_program(uint64_t index) {
  BitStream bs(index);
  Program p;
  while (!bs.exhausted()) {
    Instr ins{};
    if (bs.read() == 1) {
      ins.op = Op::Halt;
      ins.reg = uint8_t((bs.read() << 1) | bs.read());
    } else if (bs.read() == 0) {
      ins.op = Op::Inc;
      ins.reg = uint8_t((bs.read() << 1) | bs.read());
    } else {
      ins.op = Op::Dec;
      ins.reg = uint8_t((bs.read() << 1) | bs.read());
      int k = 0;
      while (!bs.exhausted() && bs.read() == 0) ++k;
      uint64_t bits = 0;
      for (int i = 0; i < k; ++i) bits = (bits << 1) | uint64_t(bs.read());
      ins.target = (uint64_t(1) << k) + bits - 1;
    }
    p.instrs.push_back(ins);
  }
  return p;
}

std::string Program::disassemble() const {
  std::ostringstream os;
  for (size_t i = 0; i < instrs.size(); ++i) {
    const Instr& ins = instrs[i];
    os << i << ": ";
    switch (ins.op) {
      case Op::Inc: os << "INC R" << int(ins.reg); break;
      case Op::Dec: os << "DEC R" << int(ins.reg) << " -> " << ins.target % (instrs.size() + 1); break;
      case Op::Halt: os << "HALT R" << int(ins.reg); break;
    }
    os << "\n";
  }
  if (instrs.empty()) os << "(empty: halts with R0)\n";
  return os.str();
}

RunOutcome run_bounded(uint64_t index, uint64_t input, uint64_t steps) {
  Program p = decode_program(index);
  const uint64_t len = p.instrs.size();
  uint64_t reg[4] = {input, 0, 0, 0};
  uint64_t pc = 0;
  for (uint64_t s = 0; s < steps; ++s) {
    if (pc >= len) return halted(reg[0]);
    const Instr& ins = p.instrs[pc];
    switch (ins.op) {
      case Op::Inc:
        ++reg[ins.reg];
        ++pc;
        break;
      case Op::Dec:
        if (reg[ins.reg] > 0) { --reg[ins.reg]; ++pc; }
        else pc = ins.target % (len + 1);
        break;
      case Op::Halt:
        return halted(reg[ins.reg]);
    }
  }
  if (pc >= len) return halted(reg[0]);
  return still_running();
}

std::optional<HaltInfo> diagonal_halt_info(uint64_t index, uint64_t max_steps) {
  Program p = decode_program(index);
  const uint64_t len = p.instrs.size();
  uint64_t reg[4] = {index, 0, 0, 0};
  uint64_t pc = 0;
  for (uint64_t s = 0; s <= max_steps; ++s) {
    if (pc >= len) return HaltInfo{s, reg[0]};
    if (s == max_steps) break;
    const Instr& ins = p.instrs[pc];
    switch (ins.op) {
      case Op::Inc:
        ++reg[ins.reg];
        ++pc;
        break;
      case Op::Dec:
        if (reg[ins.reg] > 0) { --reg[ins.reg]; ++pc; }
        else pc = ins.target % (len + 1);
        break;
      case Op::Halt:
        return HaltInfo{s + 1, reg[ins.reg]};
    }
  }
  return std::nullopt;
}

}  // namespace bfp
