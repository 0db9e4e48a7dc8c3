#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ffdg {

/// Fixed-format decimal rendering used everywhere a report carries a float:
/// %.17g, enough digits to round-trip a double bit-exactly.
std::string format_double(double value);

/// Minimal streaming JSON writer with caller-controlled key order. Reports
/// must be byte-identical across runs, so emission is fully explicit: no
/// map reordering, no locale-dependent number formatting.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view name);
  void value(std::string_view text);
  void value(const char* text) { value(std::string_view(text)); }
  void value(double number);
  void value(std::int64_t number);
  void value(std::uint64_t number);
  void value(int number) { value(std::int64_t(number)); }
  void value(bool flag);
  void null();

  const std::string& str() const { return out_; }

 private:
  void before_value();

  std::string out_;
  // One entry per open container: count of values emitted at that level.
  std::vector<std::size_t> counts_;
  bool pending_key_ = false;
};

}  // namespace ffdg
