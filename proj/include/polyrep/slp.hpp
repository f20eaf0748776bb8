#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyrep/field.hpp"

namespace polyrep {

// Straight-line program over value slots: slots [0, n) are the inputs, slot
// n + k is the result of instruction k. Operand slots always precede the
// instruction that uses them, so the program is a DAG in topological order.
// Programs are immutable once built; evaluation is pure.
class Slp {
public:
    enum class Op : std::uint8_t { constant, scale, add, sub, mul };

    struct Instr {
        Op op;
        int a = -1, b = -1;  // operand slots (scale/constant use a only / neither)
        FieldElement c;      // payload for constant and scale
    };

    Slp(int input_count, std::vector<Instr> instrs, std::vector<int> outputs);

    int input_count() const { return inputs_; }
    int length() const { return static_cast<int>(instrs_.size()); }
    std::span<const Instr> instructions() const { return instrs_; }
    std::span<const int> outputs() const { return outputs_; }

    // Evaluates over any commutative ring presented by a RingAdapter: a type
    // with `Elem`, zero(), embed(FieldElement), add/sub/mul(Elem, Elem) and
    // scale(FieldElement, Elem).
    template <class Ring>
    std::vector<typename Ring::Elem> eval(std::span<const typename Ring::Elem> args,
                                          const Ring& ring) const {
        if (static_cast<int>(args.size()) != inputs_) throw ArityMismatch();
        std::vector<typename Ring::Elem> slot;
        slot.reserve(args.size() + instrs_.size());
        for (const auto& a : args) slot.push_back(a);
        for (const auto& ins : instrs_) {
            switch (ins.op) {
                case Op::constant: slot.push_back(ring.embed(ins.c)); break;
                case Op::scale: slot.push_back(ring.scale(ins.c, slot[static_cast<std::size_t>(ins.a)])); break;
                case Op::add: slot.push_back(ring.add(slot[static_cast<std::size_t>(ins.a)], slot[static_cast<std::size_t>(ins.b)])); break;
                case Op::sub: slot.push_back(ring.sub(slot[static_cast<std::size_t>(ins.a)], slot[static_cast<std::size_t>(ins.b)])); break;
                case Op::mul: slot.push_back(ring.mul(slot[static_cast<std::size_t>(ins.a)], slot[static_cast<std::size_t>(ins.b)])); break;
            }
        }
        std::vector<typename Ring::Elem> out;
        out.reserve(outputs_.size());
        for (int o : outputs_) out.push_back(slot[static_cast<std::size_t>(o)]);
        return out;
    }

    // Reverse-mode derivative transform: for a single-output program computes
    // a program with one output per input, the partial derivatives. Length is
    // bounded by 8 * (length + inputs).
    Slp gradient() const;

    // Line-oriented text form (see serialize_slp).
    std::string serialize() const;
    static Slp deserialize(std::string_view text, const FieldSpec& spec);

private:
    int inputs_;
    std::vector<Instr> instrs_;
    std::vector<int> outputs_;
};

// Evaluation adapter for plain field arithmetic.
struct FieldRing {
    using Elem = FieldElement;
    FieldSpec spec;
    Elem zero() const { return FieldElement(spec); }
    Elem embed(const FieldElement& c) const { return c; }
    Elem add(const Elem& x, const Elem& y) const { return x + y; }
    Elem sub(const Elem& x, const Elem& y) const { return x - y; }
    Elem mul(const Elem& x, const Elem& y) const { return x * y; }
    Elem scale(const FieldElement& c, const Elem& x) const { return c * x; }
};

// Incremental program builder with structural sharing: identical instructions
// (same op and operands, with commutative operands ordered) map to one slot.
class SlpBuilder {
public:
    explicit SlpBuilder(int input_count) : inputs_(input_count) {}

    int input(int i) const;
    int constant(const FieldElement& c);
    int scale(const FieldElement& c, int a);
    int add(int a, int b);
    int sub(int a, int b);
    int mul(int a, int b);
    int power(int a, unsigned long k);  // binary powering; k == 0 embeds 1

    // Splices another program's instructions into this one, mapping its input
    // slots through `input_map`; returns the slots of its outputs.
    std::vector<int> splice(const Slp& src, std::span<const int> input_map);

    int input_count() const { return inputs_; }
    Slp build(std::vector<int> outputs) const;

private:
    int emit(Slp::Op op, int a, int b, const FieldElement& c);
    int inputs_;
    std::vector<Slp::Instr> instrs_;
    std::unordered_map<std::string, int> memo_;
};

// Stacks the gradients of several single-output programs sharing one input
// arity into a single program whose outputs, in row-major order, are the
// partial derivatives of program i with respect to the first `wrt_count`
// inputs (row i, column j: d p_i / d x_j).
Slp jacobian(std::span<const Slp> programs, int wrt_count);

}  // namespace polyrep
