#pragma once

namespace hgdef {

/// Outcome of an exact search. `inconclusive` appears only when a node budget
/// ran out; the bounds carried alongside are still sound, never a wrong answer.
enum class SolveStatus { exact, inconclusive };

} // namespace hgdef
