// Short walk through the library: topology, a pair of pants, a limit set and a boundary map.

#include <cstdio>

#include "hypsurf/hypsurf.hpp"

using namespace hypsurf;

int main() {
    for (const auto& e : thirteen_list()) {
        const auto v = is_standard(e.description);
        std::printf("%-22s chi=%s standard=%d\n", std::string(e.name).c_str(),
                    euler_characteristic(e.description).to_string().c_str(), v.standard);
    }

    const Doubling d = double_surface(SurfaceDescription::strip());
    std::printf("double(strip): chi=%s\n", d.chi_double.to_string().c_str());

    const PantsGeometry p = build_pants({1.0, 2.0, 3.0});
    std::printf("pants(1,2,3): d12=%.6f d23=%.6f d31=%.6f\n", p.seams[0].value(), p.seams[1].value(),
                p.seams[2].value());

    const GroupRep oct = octagon_group();
    for (int n = 2; n <= 4; ++n) {
        const auto s = limit_sample(oct, DiskPoint::origin(), n, SampleMode::AxisEndpoints);
        std::printf("octagon n=%d: %zu angles, max gap %.4f\n", n, s.size(), max_angular_gap(s));
    }

    const GroupRep torus = cusped_torus_group();
    const auto twist = FreeAutomorphism::parse("A=AB,B=B", 2);
    const auto v = is_boundary_identity(torus, twist, 4, 2);
    std::printf("twist %s: identity=%d residual=%.4f\n", twist.to_string().c_str(), v.identity, v.residual);
    return 0;
}
