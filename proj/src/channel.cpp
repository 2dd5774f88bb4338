#include "sstmmse/channel.hpp"

#include <cmath>

namespace sstmmse::channel {

double q_function(double x) {
    static const double inv_sqrt2 = 0.7071067811865475244;
    return 0.5 * std::erfc(x * inv_sqrt2);
}

SnrPoint snr_point(double ebno_db) {
    SnrPoint point;
    point.ebno_db = ebno_db;
    point.rho = std::pow(10.0, ebno_db / 10.0);
    point.c = std::sqrt(point.rho);
    point.epsilon = q_function(point.c);
    return point;
}

ChannelBlock transmit(std::span<const std::uint8_t> bits, const SnrPoint& snr,
                      rng::RandomSource& noise) {
    ChannelBlock block;
    block.x.resize(bits.size());
    block.z.resize(bits.size());
    block.z_hard.resize(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) {
        block.x[j] = bits[j] ? -1.0 : 1.0;
        block.z[j] = snr.c * block.x[j] + noise.next_normal();
        block.z_hard[j] = block.z[j] >= 0.0 ? 0 : 1;
    }
    return block;
}

}  // namespace sstmmse::channel
