#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "falsebottom/bundle.hpp"

namespace falsebottom::ek60 {

// Simrad EK60 RAW files are a stream of length-framed datagrams, little
// endian throughout:
//
//   uint32  length L
//   char[4] type tag ("CON0", "RAW0", "NME0", ...)
//   uint64  filetime (100 ns units since 1601-01-01)
//   byte[L - 12] body
//   uint32  trailing length, must equal L
//
// Only CON0 and RAW0 are interpreted; everything else is skippable.
struct Datagram {
    std::string type;              // 4 ASCII characters
    std::uint64_t filetime = 0;
    std::vector<std::uint8_t> body;  // payload after type + filetime
};

// Reads datagrams until end of stream. Throws FormatError with the byte
// offset of the offending field: the leading length if it is undersized or
// the payload is truncated, the trailing length field if it disagrees with
// the leading one.
std::vector<Datagram> read_datagrams(std::istream& in);

void write_datagram(std::ostream& out, const Datagram& d);

// Fixed RAW0 body header, 72 bytes, preceding the sample payload.
struct Raw0Header {
    std::int16_t channel = 1;      // 1-based transducer index
    std::int16_t mode = 3;         // 3 = power + angle; the only mode handled
    float transducer_depth = 0;    // m
    float frequency = 0;           // Hz
    float transmit_power = 0;      // W
    float pulse_length = 0;        // s
    float bandwidth = 0;           // Hz
    float sample_interval = 0;     // s
    float sound_velocity = 0;      // m/s
    float absorption = 0;          // dB/m
    float heave = 0, roll = 0, pitch = 0, temperature = 0;
    std::int32_t offset = 0;
    std::int32_t count = 0;        // samples in this ping
};

// One decoded RAW0 datagram: raw 16-bit power words plus signed 8-bit
// split-beam angle counts. In each 2-byte angle sample the low byte is the
// athwart-ship count and the high byte the along-ship count.
struct PingRecord {
    Raw0Header header;
    std::uint64_t filetime = 0;
    std::vector<std::int16_t> power;
    std::vector<std::int8_t> along;
    std::vector<std::int8_t> athwart;

    friend bool operator==(const PingRecord&, const PingRecord&) = default;
};

// swap_angle_bytes flips the athwart/along byte order for writers that do
// not follow the convention above.
PingRecord parse_raw0(const Datagram& d, bool swap_angle_bytes = false);
Datagram make_raw0(const PingRecord& ping, bool swap_angle_bytes = false);

struct TransducerConfig {
    std::string channel_id;
    double frequency_hz = 0;
    double gain_db = 0;
    double equivalent_beam_angle_db = 0;  // dB re 1 sr
    double sa_correction_db = 0;
};

// CON0 configuration datagram. Body layout: a 516-byte header (survey,
// transect and sounder names of 128 bytes each, a 30-byte version, 98
// spare bytes, int32 transducer count) followed by one 312-byte record per
// transducer (128-byte channel id, int32 beam type, 13 floats, then 5-entry
// pulse length / gain / Sa correction tables with spare padding).
struct Configuration {
    std::string survey_name;
    std::string transect_name;
    std::string sounder_name;
    std::string version;
    std::vector<TransducerConfig> transducers;
};

Configuration parse_con0(const Datagram& d);
Datagram make_con0(const Configuration& c, std::uint64_t filetime = 0);

// Inputs of the power-to-Sv conversion.
struct CalibrationParams {
    double transmit_power_w = 0;
    double gain_db = 0;
    double equivalent_beam_angle_db = 0;
    double pulse_duration_s = 0;
    double absorption_db_m = 0;
    double sound_speed_ms = 0;
    double sa_correction_db = 0;
    double frequency_khz = 0;
    double sample_interval_s = 0;

    void validate() const;  // throws ParameterError
};

struct PingColumn {
    std::vector<double> sv;           // dB re 1/m; sample 0 is no_data
    std::vector<std::int8_t> along;
    std::vector<std::int8_t> athwart;
};

// Converts one ping's raw power words to calibrated Sv:
//   power dB = word * 10 log10(2) / 256
//   r        = sample index * sound_speed * sample_interval / 2
//   Sv       = power dB + 20 log10 r + 2 a r - C - 2 Sa
// with C = 10 log10(Pt g^2 l^2 c t psi / (32 pi^2)), g and psi the linear
// gain and beam angle, l the wavelength. Sample 0 sits at r = 0 where the
// spreading term diverges, so it is marked no_data.
PingColumn power_to_sv(const PingRecord& ping, const CalibrationParams& cal,
                       double no_data = kDefaultNoData);

struct IngestOptions {
    // Channel selection: by nominal frequency (kHz, nearest match) or by
    // 1-based ordinal. With neither set the file must hold a single channel.
    std::optional<double> frequency_khz;
    std::optional<int> channel;

    bool swap_angle_bytes = false;

    // Calibration overrides, applied on top of CON0 / RAW0 values.
    std::optional<double> gain_db;
    std::optional<double> equivalent_beam_angle_db;
    std::optional<double> sa_correction_db;
    std::optional<double> transmit_power_w;
    std::optional<double> pulse_duration_s;
    std::optional<double> absorption_db_m;
    std::optional<double> sound_speed_ms;
};

struct IngestStats {
    std::map<std::string, std::size_t> datagram_counts;  // by type tag
    std::size_t pings_used = 0;
    CalibrationParams calibration;
};

// Reads a RAW stream and assembles one channel into a grid bundle. Pings
// are sorted by timestamp; ragged ping lengths are bottom-padded with
// no_data up to the longest ping. The bundle's ping interval is the median
// timestamp delta.
GridBundle ingest_raw(std::istream& in, const IngestOptions& opt = {},
                      IngestStats* stats = nullptr);
GridBundle ingest_raw(const std::filesystem::path& file, const IngestOptions& opt = {},
                      IngestStats* stats = nullptr);

// Emits a framing-valid RAW stream (CON0 then one RAW0 per ping) that
// read_datagrams + parse_raw0 invert exactly on the power, angle and
// timestamp sequences. Ping headers are normalised from cal so the file
// round-trips through ingest_raw with the same calibration.
void write_raw(std::ostream& out, const std::vector<PingRecord>& pings,
               const CalibrationParams& cal);
void write_raw(const std::filesystem::path& file, const std::vector<PingRecord>& pings,
               const CalibrationParams& cal);

}  // namespace falsebottom::ek60
