#pragma once

#include <string>
#include <vector>

#include "cgt/model.hpp"
#include "cgt/tracer.hpp"

namespace cgt {

enum class Mode { cascade, index2 };

Mode mode_from_index(int declared_index);
std::string mode_name(Mode m);

struct LawVerdict {
  std::string law;      // "INDEX", "C1" .. "C4", "C5", "C5'"
  bool pass = false;
  std::string witness;  // empty on pass
};

struct LawReport {
  Mode mode = Mode::cascade;
  std::vector<LawVerdict> verdicts;

  bool pass() const;
  const LawVerdict* find(const std::string& law) const;
  std::string to_text() const;  // one line per law: "<law> PASS|FAIL [witness]"
};

// Individual checks. All are total on valid graphs; witnesses name the
// offending vertex/edge/element.
LawVerdict check_degrees(const CurrentGraph& g);                       // C1
LawVerdict check_kcl(const CurrentGraph& g);                           // C2
LawVerdict check_vortices(const CurrentGraph& g);                      // C3
LawVerdict check_logs(const CurrentGraph& g,
                      const std::vector<FaceWalk>& faces);             // C4
LawVerdict check_parity(const CurrentGraph& g,
                        const std::vector<FaceWalk>& faces, Mode mode);  // C5 / C5'

// Face-count precondition (1 for cascades, 2 for index-2 graphs), reported
// as a law so failures carry a witness instead of aborting the run.
LawVerdict check_index(const CurrentGraph& g, const std::vector<FaceWalk>& faces, Mode mode);

// Evaluates every applicable law independently (no short-circuit).
LawReport check_laws(const CurrentGraph& g, Mode mode);

}  // namespace cgt
