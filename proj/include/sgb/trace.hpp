/**
 * @file trace.hpp
 * @brief Structured event log of a run, for invariant verification and for
 *        the machine-parsable text trace.
 */
#ifndef SGB_TRACE_HPP
#define SGB_TRACE_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgb/pairs.hpp"

namespace sgb {

enum class TraceKind {
    GwAdd,          // element appended to the weak basis
    GsAdd,          // element appended to the strong basis
    PairQueued,     // admissible pair entered the queue
    PairEliminated, // pair rejected (criterion name in `reason`)
    PairPopped,     // pair selected for processing
    ZeroReduction,  // an update input reduced to zero
    Step,           // one regular reduction step
    Boundary        // outer-loop boundary (interreduction/relabel)
};

template <class R>
struct TraceEvent {
    TraceKind kind;
    // GwAdd / GsAdd: the element as appended (cofactor present in checked mode).
    std::optional<LabelledPoly<R>> element;
    // Pair events.
    std::size_t i = 0, j = 0;
    std::optional<ModuleTerm<R>> sig;  // pair signature / zero-reduction signature
    std::string reason;                // eliminating criterion
    // Step events: data of one reduction step at the time it was taken.
    std::optional<Term<R>> reducee_lt;
    std::optional<ModuleTerm<R>> reducee_sig;
    std::optional<Term<R>> reducer_lt;
    std::optional<ModuleTerm<R>> reducer_label;
    std::optional<typename R::Elem> step_coeff;
    std::optional<Monomial> step_mono;
    // Boundary events.
    std::size_t boundary_index = 0;
};

template <class R>
using Trace = std::vector<TraceEvent<R>>;

template <class R>
void write_trace(std::ostream& os, const Trace<R>& trace,
                 const std::vector<std::string>& vars) {
    auto sig_str = [&](const std::optional<ModuleTerm<R>>& s) {
        return s ? sig_to_string<R>(*s, vars) : std::string("-");
    };
    for (const auto& ev : trace) {
        switch (ev.kind) {
            case TraceKind::GwAdd:
            case TraceKind::GsAdd:
                os << (ev.kind == TraceKind::GwAdd ? "gw_add" : "gs_add")
                   << "\tlabel=" << sig_to_string<R>(ev.element->label, vars)
                   << "\tkind="
                   << (ev.element->kind == LabelKind::Exact ? "exact" : "upper")
                   << "\tpoly=" << poly_to_string<R>(ev.element->poly, vars) << "\n";
                break;
            case TraceKind::PairQueued:
                os << "pair_queued\ti=" << ev.i << "\tj=" << ev.j
                   << "\tsig=" << sig_str(ev.sig) << "\n";
                break;
            case TraceKind::PairEliminated:
                os << "pair_eliminated\ti=" << ev.i << "\tj=" << ev.j
                   << "\tcriterion=" << ev.reason << "\tsig=" << sig_str(ev.sig) << "\n";
                break;
            case TraceKind::PairPopped:
                os << "pair_popped\ti=" << ev.i << "\tj=" << ev.j
                   << "\tsig=" << sig_str(ev.sig) << "\n";
                break;
            case TraceKind::ZeroReduction:
                os << "zero_reduction\tsig=" << sig_str(ev.sig) << "\n";
                break;
            case TraceKind::Step:
                os << "reduce_step\tlt=" << R::to_string(ev.reducee_lt->coeff) << "*"
                   << mono_to_string(ev.reducee_lt->mono, vars)
                   << "\tsig=" << sig_str(ev.reducee_sig)
                   << "\treducer_lt=" << R::to_string(ev.reducer_lt->coeff) << "*"
                   << mono_to_string(ev.reducer_lt->mono, vars)
                   << "\treducer_label=" << sig_str(ev.reducer_label)
                   << "\tc=" << R::to_string(*ev.step_coeff)
                   << "\tmu=" << mono_to_string(*ev.step_mono, vars) << "\n";
                break;
            case TraceKind::Boundary:
                os << "boundary\tindex=" << ev.boundary_index << "\n";
                break;
        }
    }
}

}  // namespace sgb

#endif
