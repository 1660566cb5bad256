#pragma once
#include <vector>

#include "arrlcs/arrangement.hpp"
#include "arrlcs/word.hpp"

namespace arrlcs {

// Raised when a requested chart fails the genericity requirements
// (vertical line, or two multiple points sharing an abscissa).
struct genericity_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One affine line y = slope * x + intercept in the generic chart.
struct AffineLine {
  int label = 0;
  Rat slope, intercept;
  Rat y_at(const Rat& x) const { return slope * x + intercept; }
};

// The affine picture of an arrangement after (1) moving the designated
// infinity line to z = 0 and (2) shearing x -> x + t*y so that no line is
// vertical and distinct multiple points get distinct abscissae.
struct GenericChart {
  std::vector<AffineLine> lines;  // sorted by label; infinity line dropped
  Rat t;                          // the chosen shear parameter
};

// Tries t = 0, 1, -1, 1/2, -1/2, 1/3, ... and keeps the first shear that
// works.  Throws genericity_violation only if `max_tries` candidates fail
// (which cannot happen for a real arrangement; the parameter is a guard).
GenericChart genericize(const Arrangement& arr, int max_tries = 10000);

// One multiple point seen by the sweep: `pos` is the 1-based position of
// the topmost wire of the block just before the event, `len` the number of
// wires meeting there.
struct WiringEvent {
  Rat x;
  std::vector<int> wires;  // labels through the point, top-to-bottom before
  int pos = 0;
  int len = 0;
};

// Left-to-right sweep of the chart: initial top-to-bottom wire order at the
// base abscissa, and the multiple points in increasing x order.
struct WiringDiagram {
  std::vector<int> order;  // initial labels, order[0] = top wire
  std::vector<WiringEvent> events;
  Rat base_x;  // (min event abscissa) - 1
  Rat t;       // shear used, carried along for reports
  std::vector<AffineLine> lines;
};

WiringDiagram build_wiring(const GenericChart& chart);
WiringDiagram build_wiring(const Arrangement& arr);

// The words the wires carry into each event when each wire starts at the
// base carrying its own meridian generator.  Letters are line LABELS.
// Entry j lists the inputs of event j, top to bottom.
std::vector<std::vector<GroupWord>> local_words(const WiringDiagram& diag);

}  // namespace arrlcs
