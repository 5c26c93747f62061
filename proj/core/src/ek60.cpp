#include "falsebottom/ek60.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace falsebottom::ek60 {

namespace {

// --- little-endian scalar encoding ----------------------------------------

void put_u16(std::vector<std::uint8_t>& b, std::uint16_t v) {
    b.push_back(std::uint8_t(v & 0xff));
    b.push_back(std::uint8_t(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(std::uint8_t((v >> (8 * i)) & 0xff));
}

void put_f32(std::vector<std::uint8_t>& b, float v) {
    std::uint32_t u;
    std::memcpy(&u, &v, 4);
    put_u32(b, u);
}

void put_bytes(std::vector<std::uint8_t>& b, const void* p, std::size_t n) {
    const auto* s = static_cast<const std::uint8_t*>(p);
    b.insert(b.end(), s, s + n);
}

// Fixed-width NUL-padded string field.
void put_text(std::vector<std::uint8_t>& b, const std::string& s, std::size_t width) {
    const std::size_t n = std::min(s.size(), width);
    put_bytes(b, s.data(), n);
    b.insert(b.end(), width - n, 0);
}

void put_zeros(std::vector<std::uint8_t>& b, std::size_t n) { b.insert(b.end(), n, 0); }

// --- bounded little-endian decoding ---------------------------------------

// Reads scalars out of a datagram body; at() throws FormatError rather than
// reading past the end, reporting the offset within the body.
class BodyReader {
public:
    explicit BodyReader(const std::vector<std::uint8_t>& body) : body_(body) {}

    std::uint8_t u8(std::size_t at) const {
        check(at, 1);
        return body_[at];
    }
    std::uint16_t u16(std::size_t at) const {
        check(at, 2);
        return std::uint16_t(body_[at]) | std::uint16_t(body_[at + 1]) << 8;
    }
    std::uint32_t u32(std::size_t at) const {
        check(at, 4);
        std::uint32_t v = 0;
        for (int i = 3; i >= 0; --i) v = (v << 8) | body_[at + std::size_t(i)];
        return v;
    }
    std::int16_t i16(std::size_t at) const { return std::int16_t(u16(at)); }
    std::int32_t i32(std::size_t at) const { return std::int32_t(u32(at)); }
    float f32(std::size_t at) const {
        const std::uint32_t u = u32(at);
        float v;
        std::memcpy(&v, &u, 4);
        return v;
    }
    std::string text(std::size_t at, std::size_t width) const {
        check(at, width);
        const auto* begin = body_.data() + at;
        const auto* nul = std::find(begin, begin + width, std::uint8_t(0));
        return std::string(begin, nul);
    }
    std::size_t size() const { return body_.size(); }

private:
    void check(std::size_t at, std::size_t n) const {
        if (at + n > body_.size()) {
            throw FormatError("datagram body ends at byte " + std::to_string(body_.size()) +
                                  ", needed " + std::to_string(n) + " at " + std::to_string(at),
                              at);
        }
    }

    const std::vector<std::uint8_t>& body_;
};

constexpr std::size_t kFrameOverhead = 12;  // type tag + filetime
constexpr std::size_t kRaw0HeaderSize = 72;
constexpr std::size_t kCon0HeaderSize = 516;
constexpr std::size_t kTransducerSize = 312;

// Raw power words carry dB in steps of 10 log10(2) / 256.
const double kPowerDbPerWord = 10.0 * std::log10(2.0) / 256.0;

}  // namespace

std::vector<Datagram> read_datagrams(std::istream& in) {
    std::vector<Datagram> out;
    std::size_t offset = 0;  // bytes consumed so far; error positions derive from it

    for (;;) {
        const std::size_t start = offset;
        std::uint8_t len_bytes[4];
        in.read(reinterpret_cast<char*>(len_bytes), 4);
        const std::size_t got = std::size_t(in.gcount());
        if (got == 0 && in.eof()) return out;  // clean end between datagrams
        if (got < 4) {
            throw FormatError("stream truncated inside a datagram length at byte " +
                                  std::to_string(start),
                              start);
        }
        std::uint32_t length = 0;
        for (int i = 3; i >= 0; --i) length = (length << 8) | len_bytes[i];
        offset += 4;
        if (length < kFrameOverhead) {
            throw FormatError("datagram length " + std::to_string(length) + " at byte " +
                                  std::to_string(start) + " is below the 12-byte minimum",
                              start);
        }

        std::vector<std::uint8_t> payload(length);
        in.read(reinterpret_cast<char*>(payload.data()), std::streamsize(length));
        if (std::size_t(in.gcount()) < length) {
            throw FormatError("stream truncated inside the datagram starting at byte " +
                                  std::to_string(start),
                              start);
        }
        offset += length;

        std::uint8_t trailer_bytes[4];
        in.read(reinterpret_cast<char*>(trailer_bytes), 4);
        if (std::size_t(in.gcount()) < 4) {
            throw FormatError("stream ends before the trailing length of the datagram "
                              "starting at byte " +
                                  std::to_string(start),
                              start);
        }
        std::uint32_t trailer = 0;
        for (int i = 3; i >= 0; --i) trailer = (trailer << 8) | trailer_bytes[i];
        if (trailer != length) {
            throw FormatError("trailing length " + std::to_string(trailer) + " at byte " +
                                  std::to_string(offset) + " does not match the leading " +
                                  std::to_string(length),
                              offset);
        }
        offset += 4;

        Datagram d;
        d.type.assign(payload.begin(), payload.begin() + 4);
        for (int i = 7; i >= 0; --i) d.filetime = (d.filetime << 8) | payload[4 + std::size_t(i)];
        d.body.assign(payload.begin() + kFrameOverhead, payload.end());
        out.push_back(std::move(d));
    }
}

void write_datagram(std::ostream& out, const Datagram& d) {
    if (d.type.size() != 4) {
        throw ParameterError("datagram type must be 4 characters, got '" + d.type + "'");
    }
    const std::uint32_t length = std::uint32_t(kFrameOverhead + d.body.size());
    std::vector<std::uint8_t> bytes;
    bytes.reserve(8 + length);
    put_u32(bytes, length);
    put_bytes(bytes, d.type.data(), 4);
    for (int i = 0; i < 8; ++i) bytes.push_back(std::uint8_t((d.filetime >> (8 * i)) & 0xff));
    put_bytes(bytes, d.body.data(), d.body.size());
    put_u32(bytes, length);
    out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!out) throw IoError("short write while emitting a datagram");
}

PingRecord parse_raw0(const Datagram& d, bool swap_angle_bytes) {
    if (d.type != "RAW0") {
        throw ParameterError("expected a RAW0 datagram, got '" + d.type + "'");
    }
    BodyReader body(d.body);
    if (body.size() < kRaw0HeaderSize) {
        throw FormatError("RAW0 body is " + std::to_string(body.size()) +
                          " bytes, the fixed header needs 72");
    }

    PingRecord p;
    p.filetime = d.filetime;
    p.header.channel = body.i16(0);
    p.header.mode = body.i16(2);
    p.header.transducer_depth = body.f32(4);
    p.header.frequency = body.f32(8);
    p.header.transmit_power = body.f32(12);
    p.header.pulse_length = body.f32(16);
    p.header.bandwidth = body.f32(20);
    p.header.sample_interval = body.f32(24);
    p.header.sound_velocity = body.f32(28);
    p.header.absorption = body.f32(32);
    p.header.heave = body.f32(36);
    p.header.roll = body.f32(40);
    p.header.pitch = body.f32(44);
    p.header.temperature = body.f32(48);
    // bytes 52..63 are trawl telemetry, not carried
    p.header.offset = body.i32(64);
    p.header.count = body.i32(68);

    if (p.header.mode != 3) {
        throw FormatError("RAW0 mode " + std::to_string(p.header.mode) +
                          " is unsupported; only mode 3 (power + angle) is handled");
    }
    if (p.header.count < 0) {
        throw FormatError("RAW0 sample count is negative: " + std::to_string(p.header.count));
    }
    const std::size_t n = std::size_t(p.header.count);
    const std::size_t expected = kRaw0HeaderSize + 2 * n + 2 * n;
    if (body.size() != expected) {
        throw FormatError("RAW0 body is " + std::to_string(body.size()) + " bytes but " +
                          std::to_string(n) + " power+angle samples need " +
                          std::to_string(expected));
    }

    p.power.resize(n);
    p.along.resize(n);
    p.athwart.resize(n);
    const std::size_t angles_at = kRaw0HeaderSize + 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        p.power[i] = body.i16(kRaw0HeaderSize + 2 * i);
        // each angle sample is two signed bytes: athwart low, along high
        std::uint8_t low = body.u8(angles_at + 2 * i);
        std::uint8_t high = body.u8(angles_at + 2 * i + 1);
        if (swap_angle_bytes) std::swap(low, high);
        p.athwart[i] = std::int8_t(low);
        p.along[i] = std::int8_t(high);
    }
    return p;
}

Datagram make_raw0(const PingRecord& ping, bool swap_angle_bytes) {
    const std::size_t n = ping.power.size();
    if (ping.along.size() != n || ping.athwart.size() != n) {
        throw ParameterError("power and angle sequences differ in length");
    }

    std::vector<std::uint8_t> b;
    b.reserve(kRaw0HeaderSize + 4 * n);
    put_u16(b, std::uint16_t(ping.header.channel));
    put_u16(b, 3);  // mode: power + angle
    put_f32(b, ping.header.transducer_depth);
    put_f32(b, ping.header.frequency);
    put_f32(b, ping.header.transmit_power);
    put_f32(b, ping.header.pulse_length);
    put_f32(b, ping.header.bandwidth);
    put_f32(b, ping.header.sample_interval);
    put_f32(b, ping.header.sound_velocity);
    put_f32(b, ping.header.absorption);
    put_f32(b, ping.header.heave);
    put_f32(b, ping.header.roll);
    put_f32(b, ping.header.pitch);
    put_f32(b, ping.header.temperature);
    put_zeros(b, 12);  // trawl telemetry
    put_u32(b, std::uint32_t(ping.header.offset));
    put_u32(b, std::uint32_t(n));
    for (std::size_t i = 0; i < n; ++i) put_u16(b, std::uint16_t(ping.power[i]));
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t low = std::uint8_t(ping.athwart[i]);
        std::uint8_t high = std::uint8_t(ping.along[i]);
        if (swap_angle_bytes) std::swap(low, high);
        b.push_back(low);
        b.push_back(high);
    }

    Datagram d;
    d.type = "RAW0";
    d.filetime = ping.filetime;
    d.body = std::move(b);
    return d;
}

Configuration parse_con0(const Datagram& d) {
    if (d.type != "CON0") {
        throw ParameterError("expected a CON0 datagram, got '" + d.type + "'");
    }
    BodyReader body(d.body);
    if (body.size() < kCon0HeaderSize) {
        throw FormatError("CON0 body is " + std::to_string(body.size()) +
                          " bytes, the header needs 516");
    }

    Configuration c;
    c.survey_name = body.text(0, 128);
    c.transect_name = body.text(128, 128);
    c.sounder_name = body.text(256, 128);
    c.version = body.text(384, 30);
    const std::int32_t count = body.i32(512);
    if (count < 0 || body.size() != kCon0HeaderSize + std::size_t(count) * kTransducerSize) {
        throw FormatError("CON0 transducer count " + std::to_string(count) +
                          " does not match the body size " + std::to_string(body.size()));
    }

    for (std::int32_t i = 0; i < count; ++i) {
        const std::size_t at = kCon0HeaderSize + std::size_t(i) * kTransducerSize;
        TransducerConfig t;
        t.channel_id = body.text(at, 128);
        // beam type int32 at +128, then the float block
        t.frequency_hz = body.f32(at + 132);
        t.gain_db = body.f32(at + 136);
        t.equivalent_beam_angle_db = body.f32(at + 140);
        t.sa_correction_db = body.f32(at + 240);  // first entry of the Sa table
        c.transducers.push_back(std::move(t));
    }
    return c;
}

Datagram make_con0(const Configuration& c, std::uint64_t filetime) {
    std::vector<std::uint8_t> b;
    b.reserve(kCon0HeaderSize + c.transducers.size() * kTransducerSize);
    put_text(b, c.survey_name, 128);
    put_text(b, c.transect_name, 128);
    put_text(b, c.sounder_name, 128);
    put_text(b, c.version, 30);
    put_zeros(b, 98);  // spare
    put_u32(b, std::uint32_t(c.transducers.size()));

    for (const TransducerConfig& t : c.transducers) {
        put_text(b, t.channel_id, 128);
        put_u32(b, 0);  // beam type
        put_f32(b, float(t.frequency_hz));
        put_f32(b, float(t.gain_db));
        put_f32(b, float(t.equivalent_beam_angle_db));
        put_zeros(b, 4 * 10);          // beam widths, sensitivities, offsets
        put_zeros(b, 4 * 5 + 8);       // pulse length table + spare
        put_zeros(b, 4 * 5 + 8);       // gain table + spare
        put_f32(b, float(t.sa_correction_db));  // first entry of the Sa table
        put_zeros(b, 4 * 4 + 8);       // rest of the Sa table + spare
        put_zeros(b, 16 + 28);         // version text + spare
    }

    Datagram d;
    d.type = "CON0";
    d.filetime = filetime;
    d.body = std::move(b);
    return d;
}

void CalibrationParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ParameterError(std::string(name) + " must be positive, got " +
                                 std::to_string(v));
        }
    };
    positive(transmit_power_w, "transmit power");
    positive(pulse_duration_s, "pulse duration");
    positive(sound_speed_ms, "sound speed");
    positive(frequency_khz, "frequency");
    positive(sample_interval_s, "sample interval");
    if (!std::isfinite(gain_db) || !std::isfinite(equivalent_beam_angle_db) ||
        !std::isfinite(sa_correction_db)) {
        throw ParameterError("gain, beam angle and Sa correction must be finite");
    }
    if (absorption_db_m < 0.0 || !std::isfinite(absorption_db_m)) {
        throw ParameterError("absorption must be >= 0, got " + std::to_string(absorption_db_m));
    }
}

PingColumn power_to_sv(const PingRecord& ping, const CalibrationParams& cal, double no_data) {
    cal.validate();
    const std::size_t n = ping.power.size();
    if (ping.along.size() != n || ping.athwart.size() != n) {
        throw ParameterError("power and angle sequences differ in length");
    }

    const double c = cal.sound_speed_ms;
    const double wavelength = c / (cal.frequency_khz * 1000.0);
    const double gain = std::pow(10.0, cal.gain_db / 10.0);
    const double psi = std::pow(10.0, cal.equivalent_beam_angle_db / 10.0);
    const double correction =
        10.0 * std::log10(cal.transmit_power_w * gain * gain * wavelength * wavelength * c *
                          cal.pulse_duration_s * psi / (32.0 * std::numbers::pi_v<double> *
                                                        std::numbers::pi_v<double>));
    const double range_step = c * cal.sample_interval_s / 2.0;

    PingColumn col;
    col.sv.resize(n);
    col.along = ping.along;
    col.athwart = ping.athwart;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = double(ping.header.offset + std::int64_t(i)) * range_step;
        if (r <= 0.0) {
            col.sv[i] = no_data;  // the spreading term diverges at zero range
            continue;
        }
        col.sv[i] = double(ping.power[i]) * kPowerDbPerWord + 20.0 * std::log10(r) +
                    2.0 * cal.absorption_db_m * r - correction - 2.0 * cal.sa_correction_db;
    }
    return col;
}

namespace {

struct SelectedChannel {
    std::int16_t channel = 0;
    const TransducerConfig* transducer = nullptr;
};

SelectedChannel select_channel(const Configuration& cfg,
                               const std::vector<std::int16_t>& channels_present,
                               const IngestOptions& opt) {
    SelectedChannel sel;
    if (opt.frequency_khz && opt.channel) {
        throw ParameterError("pass either a frequency or a channel ordinal, not both");
    }
    if (opt.channel) {
        sel.channel = std::int16_t(*opt.channel);
        if (*opt.channel < 1 || std::size_t(*opt.channel) > cfg.transducers.size()) {
            throw LookupError("channel " + std::to_string(*opt.channel) +
                              " is out of range; the file configures " +
                              std::to_string(cfg.transducers.size()) + " transducers");
        }
    } else if (opt.frequency_khz) {
        // nearest nominal frequency, within 5% (at least 1 kHz) of the request
        const double want = *opt.frequency_khz;
        const double tolerance = std::max(1.0, 0.05 * want);
        std::size_t best = cfg.transducers.size();
        double best_gap = tolerance;
        for (std::size_t i = 0; i < cfg.transducers.size(); ++i) {
            const double gap = std::abs(cfg.transducers[i].frequency_hz / 1000.0 - want);
            if (gap <= best_gap) {
                best_gap = gap;
                best = i;
            }
        }
        if (best == cfg.transducers.size()) {
            throw LookupError("no channel within " + std::to_string(tolerance) + " kHz of " +
                              std::to_string(want) + " kHz");
        }
        sel.channel = std::int16_t(best + 1);
    } else {
        if (channels_present.size() > 1) {
            throw ParameterError("the file holds " + std::to_string(channels_present.size()) +
                                 " channels; select one by frequency or ordinal");
        }
        sel.channel = channels_present.empty() ? 1 : channels_present.front();
    }
    if (sel.channel >= 1 && std::size_t(sel.channel) <= cfg.transducers.size()) {
        sel.transducer = &cfg.transducers[std::size_t(sel.channel) - 1];
    }
    return sel;
}

}  // namespace

GridBundle ingest_raw(std::istream& in, const IngestOptions& opt, IngestStats* stats) {
    const std::vector<Datagram> datagrams = read_datagrams(in);

    IngestStats local;
    for (const Datagram& d : datagrams) ++local.datagram_counts[d.type];

    const Datagram* con0 = nullptr;
    for (const Datagram& d : datagrams) {
        if (d.type == "CON0") {
            con0 = &d;
            break;
        }
    }
    if (!con0) throw FormatError("the stream holds no CON0 configuration datagram");
    const Configuration cfg = parse_con0(*con0);

    std::vector<PingRecord> pings;
    std::vector<std::int16_t> channels_present;
    for (const Datagram& d : datagrams) {
        if (d.type != "RAW0") continue;
        PingRecord p = parse_raw0(d, opt.swap_angle_bytes);
        if (std::find(channels_present.begin(), channels_present.end(), p.header.channel) ==
            channels_present.end()) {
            channels_present.push_back(p.header.channel);
        }
        pings.push_back(std::move(p));
    }

    const SelectedChannel sel = select_channel(cfg, channels_present, opt);
    std::erase_if(pings, [&](const PingRecord& p) { return p.header.channel != sel.channel; });
    if (pings.empty()) {
        throw FormatError("no RAW0 datagrams for channel " + std::to_string(sel.channel));
    }
    std::stable_sort(pings.begin(), pings.end(),
                     [](const PingRecord& a, const PingRecord& b) {
                         return a.filetime < b.filetime;
                     });

    // Effective calibration: transducer table + first ping header, then
    // explicit overrides.
    CalibrationParams cal;
    if (sel.transducer) {
        cal.gain_db = sel.transducer->gain_db;
        cal.equivalent_beam_angle_db = sel.transducer->equivalent_beam_angle_db;
        cal.sa_correction_db = sel.transducer->sa_correction_db;
    }
    const Raw0Header& first = pings.front().header;
    cal.transmit_power_w = first.transmit_power;
    cal.pulse_duration_s = first.pulse_length;
    cal.sample_interval_s = first.sample_interval;
    cal.sound_speed_ms = first.sound_velocity;
    cal.absorption_db_m = first.absorption;
    cal.frequency_khz = first.frequency / 1000.0;
    if (opt.gain_db) cal.gain_db = *opt.gain_db;
    if (opt.equivalent_beam_angle_db) cal.equivalent_beam_angle_db = *opt.equivalent_beam_angle_db;
    if (opt.sa_correction_db) cal.sa_correction_db = *opt.sa_correction_db;
    if (opt.transmit_power_w) cal.transmit_power_w = *opt.transmit_power_w;
    if (opt.pulse_duration_s) cal.pulse_duration_s = *opt.pulse_duration_s;
    if (opt.absorption_db_m) cal.absorption_db_m = *opt.absorption_db_m;
    if (opt.sound_speed_ms) cal.sound_speed_ms = *opt.sound_speed_ms;
    cal.validate();

    std::size_t rows = 0;
    for (const PingRecord& p : pings) rows = std::max(rows, p.power.size());
    if (rows == 0) throw FormatError("every selected ping is empty");

    const double no_data = kDefaultNoData;
    Grid<double> sv(rows, pings.size(), no_data);
    Grid<std::int8_t> along(rows, pings.size(), 0);
    Grid<std::int8_t> athwart(rows, pings.size(), 0);
    std::vector<std::uint64_t> times;
    times.reserve(pings.size());
    for (std::size_t c = 0; c < pings.size(); ++c) {
        const PingColumn col = power_to_sv(pings[c], cal, no_data);
        for (std::size_t r = 0; r < col.sv.size(); ++r) {
            sv.at(r, c) = col.sv[r];
            along.at(r, c) = col.along[r];
            athwart.at(r, c) = col.athwart[r];
        }
        times.push_back(pings[c].filetime);
    }

    // median timestamp delta, in seconds (timestamps count 100 ns units)
    double ping_interval = 0.0;
    if (times.size() > 1) {
        std::vector<std::uint64_t> deltas;
        deltas.reserve(times.size() - 1);
        for (std::size_t i = 1; i < times.size(); ++i) deltas.push_back(times[i] - times[i - 1]);
        std::nth_element(deltas.begin(), deltas.begin() + deltas.size() / 2, deltas.end());
        ping_interval = double(deltas[deltas.size() / 2]) / 1e7;
    }

    EchogramMeta meta;
    meta.range_step_m = cal.sound_speed_ms * cal.sample_interval_s / 2.0;
    meta.frequency_khz = cal.frequency_khz;
    meta.no_data = no_data;
    meta.ping_interval_s = ping_interval;
    meta.sound_speed_ms = cal.sound_speed_ms;
    meta.ping_times = std::move(times);

    Echogram echogram(std::move(sv), std::move(meta));
    AngleChannels angles =
        AngleChannels::for_echogram(std::move(along), std::move(athwart), echogram);

    if (stats) {
        local.pings_used = pings.size();
        local.calibration = cal;
        *stats = std::move(local);
    }
    return GridBundle{std::move(echogram), std::move(angles), std::nullopt};
}

GridBundle ingest_raw(const std::filesystem::path& file, const IngestOptions& opt,
                      IngestStats* stats) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot read " + file.string());
    return ingest_raw(in, opt, stats);
}

void write_raw(std::ostream& out, const std::vector<PingRecord>& pings,
               const CalibrationParams& cal) {
    cal.validate();

    Configuration cfg;
    cfg.sounder_name = "EK60";
    cfg.version = "2.4.3";
    TransducerConfig t;
    t.channel_id = "channel-1";
    t.frequency_hz = cal.frequency_khz * 1000.0;
    t.gain_db = cal.gain_db;
    t.equivalent_beam_angle_db = cal.equivalent_beam_angle_db;
    t.sa_correction_db = cal.sa_correction_db;
    cfg.transducers.push_back(std::move(t));

    const std::uint64_t config_time = pings.empty() ? 0 : pings.front().filetime;
    write_datagram(out, make_con0(cfg, config_time));

    for (PingRecord ping : pings) {
        ping.header.channel = 1;
        ping.header.mode = 3;
        ping.header.frequency = float(cal.frequency_khz * 1000.0);
        ping.header.transmit_power = float(cal.transmit_power_w);
        ping.header.pulse_length = float(cal.pulse_duration_s);
        ping.header.sample_interval = float(cal.sample_interval_s);
        ping.header.sound_velocity = float(cal.sound_speed_ms);
        ping.header.absorption = float(cal.absorption_db_m);
        ping.header.count = std::int32_t(ping.power.size());
        write_datagram(out, make_raw0(ping));
    }
}

void write_raw(const std::filesystem::path& file, const std::vector<PingRecord>& pings,
               const CalibrationParams& cal) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    write_raw(out, pings, cal);
}

}  // namespace falsebottom::ek60
