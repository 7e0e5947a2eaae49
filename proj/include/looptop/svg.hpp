/*
   Copyright 2026 looptop contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOOPTOP_SVG_HPP
#define LOOPTOP_SVG_HPP

#include "looptop/annulus.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace looptop {

/// Standalone stroke-only SVG of the two canonical foliations, inline
/// styles only.
inline std::string foliation_svg(const Foliations& f, double stroke_width = 0.0) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    auto grow = [&](const std::vector<std::vector<Cx>>& leaves) {
        for (const auto& leaf : leaves)
            for (const Cx& z : leaf) {
                if (first) {
                    xmin = xmax = z.real();
                    ymin = ymax = z.imag();
                    first = false;
                } else {
                    xmin = std::min(xmin, z.real());
                    xmax = std::max(xmax, z.real());
                    ymin = std::min(ymin, z.imag());
                    ymax = std::max(ymax, z.imag());
                }
            }
    };
    grow(f.radial);
    grow(f.circular);
    double w = xmax - xmin, h = ymax - ymin;
    double pad = 0.05 * std::max(w, h);
    if (stroke_width <= 0) stroke_width = 0.004 * std::max(w, h);

    std::ostringstream os;
    os << std::setprecision(6) << std::fixed;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (xmin - pad) << " "
       << (ymin - pad) << " " << (w + 2 * pad) << " " << (h + 2 * pad) << "\">\n";
    auto emit = [&](const std::vector<std::vector<Cx>>& leaves, const char* color) {
        os << "  <g fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << stroke_width
           << "\">\n";
        for (const auto& leaf : leaves) {
            os << "    <path d=\"";
            for (std::size_t i = 0; i < leaf.size(); ++i)
                os << (i == 0 ? "M " : "L ") << leaf[i].real() << " " << leaf[i].imag() << " ";
            os << "\"/>\n";
        }
        os << "  </g>\n";
    };
    emit(f.radial, "#1f77b4");
    emit(f.circular, "#d62728");
    os << "</svg>\n";
    return os.str();
}

}  // namespace looptop

#endif
