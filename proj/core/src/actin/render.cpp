#include "myxo/actin/render.hpp"

#include <sstream>

#include "myxo/errors.hpp"

namespace myxo::actin {

io::GrayImage diagram_to_image(const SpaceTimeDiagram& diagram, bool two_tone) {
    io::GrayImage img(diagram.n, diagram.rows());
    const std::uint8_t refractory = two_tone ? 255 : 128;
    for (std::size_t i = 0; i < diagram.cells.size(); ++i) {
        switch (diagram.cells[i]) {
        case NodeState::Excited: img.pixels[i] = 0; break;
        case NodeState::Refractory: img.pixels[i] = refractory; break;
        case NodeState::Resting: img.pixels[i] = 255; break;
        }
    }
    return img;
}

std::string activity_to_csv(const ActivitySeries& x, const ActivitySeries& y) {
    if (x.per_step_excited.size() != y.per_step_excited.size()) {
        throw RuntimeError("activity series length mismatch");
    }
    std::ostringstream out;
    out << "step,excited_x,excited_y\n";
    for (std::size_t k = 0; k < x.per_step_excited.size(); ++k) {
        out << k << "," << x.per_step_excited[k] << "," << y.per_step_excited[k] << "\n";
    }
    return out.str();
}

} // namespace myxo::actin
