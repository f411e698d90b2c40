#ifndef QUEUELAY_RENDER_HPP
#define QUEUELAY_RENDER_HPP

#include <string>

#include "queuelay/graph.hpp"
#include "queuelay/layout.hpp"

namespace queuelay {

// Arc diagram of a layout as standalone SVG text: vertices on a horizontal
// spine in spine order, one semicircular arc per edge above it, queue ids
// colored from a fixed 12-color palette with dash patterns cycling past 12.
// Geometry is integer and the text carries no timestamps, so equal inputs
// give byte-equal output. Invalid layouts render fine (that is the point:
// they are the ones worth staring at); pass `highlight` to draw a witness
// chain thickened, e.g. a violating nesting pair.
std::string render_arc_diagram(const Graph& g, const QueueLayout& L,
                               const RainbowWitness* highlight = nullptr);

}  // namespace queuelay

#endif
