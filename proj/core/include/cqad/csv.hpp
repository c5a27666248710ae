#pragma once

#include <ostream>
#include <span>
#include <string>

#include "cqad/dressed.hpp"
#include "cqad/steady_state.hpp"
#include "cqad/sweeps.hpp"

namespace cqad {

// Locale-independent shortest-of-12-significant-digits rendering.
std::string format_number(double value);

// probe_mhz,re_t,im_t,abs_t,arg_t
void write_spectrum_csv(std::ostream& os, const SpectrumResult& result);
// flux_phi0,probe_mhz,abs_t,arg_t
void write_anticrossing_csv(std::ostream& os, const AnticrossingMap& map);
// n,kind,freq_mhz,amplitude
void write_dressed_csv(std::ostream& os, std::span<const TransitionLine> lines);
// temperature_mk,probe_mhz,re_t,im_t,abs_t,arg_t
void write_tempsweep_csv(std::ostream& os, std::span<const TemperaturePoint> series);
// power_dbm,phonon_number,qubit_mhz,drive_mhz,abs_r
void write_stark_csv(std::ostream& os, const StarkScan& scan);

// Trailing comment that flags an uncertified Fock truncation.
inline constexpr const char* kUncertifiedMarker = "# truncation-uncertified";
void write_uncertified_marker(std::ostream& os);

// Opens `path` for writing ("-" is stdout) and hands the stream to `write`.
// Throws IoError when the file cannot be written.
template <typename Writer>
void emit_csv(const std::string& path, Writer&& write);

} // namespace cqad

#include <fstream>
#include <iostream>

#include "cqad/error.hpp"

namespace cqad {

template <typename Writer>
void emit_csv(const std::string& path, Writer&& write)
{
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    write(out);
    out.flush();
    if (!out)
        throw IoError("failed writing " + path);
}

} // namespace cqad
