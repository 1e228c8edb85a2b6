#include "stmodal/errors.hpp"
#include "stmodal/model.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <vector>

namespace stmodal {

std::string format_verdict(const Frame& frame, const ValidityVerdict& v) {
    if (v.valid) return "VALID";
    std::string out = "COUNTER world=" + frame.name(v.world) + " valuation={";
    bool first = true;
    for (const auto& [atom, set] : v.valuation) {
        if (!first) out += ',';
        out += atom + ":" + format_set(frame, set);
        first = false;
    }
    return out + "}";
}

std::uint64_t valuation_count_log2(const Frame& frame, const Formula& f) {
    return static_cast<std::uint64_t>(frame.size()) * atoms(f).size();
}

namespace {

void check_budget(const Frame& frame, const Formula& f, std::uint64_t cap) {
    const std::uint64_t bits = valuation_count_log2(frame, f);
    if (bits >= 64 || (std::uint64_t{1} << bits) > cap) throw BudgetExceeded(bits, cap);
}

Valuation decode(const Frame& frame, const std::vector<std::string>& names, std::uint64_t index) {
    Valuation val;
    const std::size_t n = frame.size();
    for (std::size_t a = 0; a < names.size(); ++a) {
        WorldSet s(n);
        for (World w = 0; w < n; ++w)
            if ((index >> (a * n + w)) & 1U) s.insert(w);
        val.emplace(names[a], std::move(s));
    }
    return val;
}

/// Formula flattened into post-order over 64-bit world masks.
class MaskProgram {
public:
    MaskProgram(const Frame& frame, const Formula& f, const std::vector<std::string>& atom_names)
        : n_(frame.size()), full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1) {
        for (World w = 0; w < n_; ++w) {
            std::uint64_t m = 0;
            for (World y : frame.successors(w).members()) m |= std::uint64_t{1} << y;
            succ_.push_back(m);
        }
        emit(f, atom_names);
    }

    [[nodiscard]] std::uint64_t full() const { return full_; }
    [[nodiscard]] std::size_t slots() const { return code_.size(); }

    /// Truth mask of the formula under valuation `index`; `regs` needs slots() entries.
    std::uint64_t eval(std::uint64_t index, std::uint64_t* regs) const {
        for (std::size_t i = 0; i < code_.size(); ++i) {
            const Instr& in = code_[i];
            std::uint64_t r = 0;
            switch (in.op) {
            case Op::Top: r = full_; break;
            case Op::Bottom: r = 0; break;
            case Op::Atom: r = (index >> (in.a * n_)) & full_; break;
            case Op::Not: r = ~regs[in.a] & full_; break;
            case Op::And: r = regs[in.a] & regs[in.b]; break;
            case Op::Or: r = regs[in.a] | regs[in.b]; break;
            case Op::Implies: r = (~regs[in.a] | regs[in.b]) & full_; break;
            case Op::Iff: r = ~(regs[in.a] ^ regs[in.b]) & full_; break;
            case Op::Diamond:
                for (World w = 0; w < n_; ++w)
                    if (succ_[w] & regs[in.a]) r |= std::uint64_t{1} << w;
                break;
            case Op::Box:
                for (World w = 0; w < n_; ++w)
                    if ((succ_[w] & ~regs[in.a]) == 0) r |= std::uint64_t{1} << w;
                break;
            }
            regs[i] = r;
        }
        return regs[code_.size() - 1];
    }

private:
    struct Instr {
        Op op;
        std::size_t a = 0;
        std::size_t b = 0;
    };

    std::size_t emit(const Formula& f, const std::vector<std::string>& names) {
        Instr in{f.op()};
        if (f.op() == Op::Atom) {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == f.name()) in.a = i;
        } else if (f.children().size() == 1) {
            in.a = emit(f.operand(), names);
        } else if (f.children().size() == 2) {
            in.a = emit(f.lhs(), names);
            in.b = emit(f.rhs(), names);
        }
        code_.push_back(in);
        return code_.size() - 1;
    }

    std::size_t n_;
    std::uint64_t full_;
    std::vector<std::uint64_t> succ_;
    std::vector<Instr> code_;
};

ValidityVerdict counter_model(const Frame& frame, const std::vector<std::string>& names, std::uint64_t index,
                              World world) {
    ValidityVerdict v;
    v.valid = false;
    v.valuation = decode(frame, names, index);
    v.world = world;
    v.valuation_index = index;
    return v;
}

} // namespace

ValidityVerdict frame_validates(const Frame& frame, const Formula& f, std::uint64_t cap) {
    check_budget(frame, f, cap);
    const auto atom_set = atoms(f);
    const std::vector<std::string> names(atom_set.begin(), atom_set.end());
    if (frame.size() == 0) return {};
    if (frame.size() > 64) {
        // Only reachable without atoms: a single (empty) valuation.
        const WorldSet t = truth_set(Model(frame), f);
        if (t == frame.all()) return {};
        return counter_model(frame, names, 0, t.complement().first());
    }

    const MaskProgram prog(frame, f, names);
    const std::uint64_t total = std::uint64_t{1} << valuation_count_log2(frame, f);
    constexpr std::uint64_t block = 1024;
    const std::int64_t blocks = static_cast<std::int64_t>((total + block - 1) / block);
    std::atomic<std::uint64_t> best{total};

#pragma omp parallel
    {
        std::vector<std::uint64_t> regs(prog.slots());
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const std::uint64_t lo = static_cast<std::uint64_t>(b) * block;
            if (lo >= best.load(std::memory_order_relaxed)) continue;
            const std::uint64_t hi = std::min(total, lo + block);
            for (std::uint64_t v = lo; v < hi; ++v) {
                const std::uint64_t mask = prog.eval(v, regs.data());
                if (mask == prog.full()) continue;
                // Keep the smallest counter index across workers.
                std::uint64_t cur = best.load();
                while (v < cur && !best.compare_exchange_weak(cur, v)) {
                }
                break;
            }
        }
    }

    const std::uint64_t found = best.load();
    if (found == total) return {};
    std::vector<std::uint64_t> regs(prog.slots());
    const std::uint64_t failing = ~prog.eval(found, regs.data()) & prog.full();
    return counter_model(frame, names, found, static_cast<World>(std::countr_zero(failing)));
}

ValidityVerdict frame_validates_reference(const Frame& frame, const Formula& f, std::uint64_t cap) {
    check_budget(frame, f, cap);
    const auto atom_set = atoms(f);
    const std::vector<std::string> names(atom_set.begin(), atom_set.end());
    const std::uint64_t total = std::uint64_t{1} << valuation_count_log2(frame, f);
    for (std::uint64_t v = 0; v < total; ++v) {
        const Model m(frame, decode(frame, names, v));
        for (World w = 0; w < frame.size(); ++w)
            if (!satisfies(m, w, f)) return counter_model(frame, names, v, w);
    }
    return {};
}

} // namespace stmodal
