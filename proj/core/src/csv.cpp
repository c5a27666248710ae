#include "cqad/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace cqad {

std::string format_number(double value)
{
    if (value == 0.0)
        value = 0.0; // drop the sign of -0
    std::array<char, 48> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    (void)ec;
    return std::string(buf.data(), ptr);
}

namespace {

void complex_columns(std::ostream& os, Complex t, bool with_parts)
{
    if (with_parts)
        os << ',' << format_number(t.real()) << ',' << format_number(t.imag());
    os << ',' << format_number(std::abs(t)) << ',' << format_number(std::arg(t));
}

} // namespace

void write_spectrum_csv(std::ostream& os, const SpectrumResult& result)
{
    os << "probe_mhz,re_t,im_t,abs_t,arg_t\n";
    for (std::size_t i = 0; i < result.probe_frequencies.size(); ++i) {
        os << format_number(result.probe_frequencies[i]);
        complex_columns(os, result.t_values[i], true);
        os << '\n';
    }
}

void write_anticrossing_csv(std::ostream& os, const AnticrossingMap& map)
{
    os << "flux_phi0,probe_mhz,abs_t,arg_t\n";
    for (std::size_t r = 0; r < map.flux_grid.size(); ++r) {
        for (std::size_t c = 0; c < map.probe_grid.size(); ++c) {
            os << format_number(map.flux_grid[r]) << ',' << format_number(map.probe_grid[c]);
            complex_columns(os, map.t_grid[r][c], false);
            os << '\n';
        }
    }
}

void write_dressed_csv(std::ostream& os, std::span<const TransitionLine> lines)
{
    os << "n,kind,freq_mhz,amplitude\n";
    for (const auto& l : lines)
        os << l.n << ',' << to_string(l.kind) << ',' << format_number(l.frequency) << ','
           << format_number(l.relative_amplitude) << '\n';
}

void write_tempsweep_csv(std::ostream& os, std::span<const TemperaturePoint> series)
{
    os << "temperature_mk,probe_mhz,re_t,im_t,abs_t,arg_t\n";
    for (const auto& point : series) {
        const auto& s = point.spectrum;
        for (std::size_t i = 0; i < s.probe_frequencies.size(); ++i) {
            os << format_number(point.temperature) << ',' << format_number(s.probe_frequencies[i]);
            complex_columns(os, s.t_values[i], true);
            os << '\n';
        }
    }
}

void write_stark_csv(std::ostream& os, const StarkScan& scan)
{
    os << "power_dbm,phonon_number,qubit_mhz,drive_mhz,abs_r\n";
    for (std::size_t p = 0; p < scan.power_grid.size(); ++p)
        for (std::size_t k = 0; k < scan.drive_frequencies.size(); ++k)
            os << format_number(scan.power_grid[p]) << ',' << format_number(scan.phonon_numbers[p]) << ','
               << format_number(scan.shifted_qubit_freq[p]) << ',' << format_number(scan.drive_frequencies[k]) << ','
               << format_number(scan.qubit_response[p][k]) << '\n';
}

void write_uncertified_marker(std::ostream& os) { os << kUncertifiedMarker << '\n'; }

} // namespace cqad
