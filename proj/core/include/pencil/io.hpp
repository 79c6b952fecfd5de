// File formats and canonical structured reports.
//
// Fiber, ledger, and base-change spec files are JSON documents; every
// rational value is serialized as an exact "p/q" string ("p" when the
// denominator is 1). Structured report output is canonical: fixed key
// order, versioned with a top-level "version" field, byte-identical for
// identical inputs.
#pragma once

#include <string>

#include "pencil/certify.hpp"
#include "pencil/cover.hpp"
#include "pencil/cyclic.hpp"
#include "pencil/fiber.hpp"
#include "pencil/ledger.hpp"

namespace pencil::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

FiberConfig parse_fiber_json(const std::string& text, const std::string& fallback_name);
FiberConfig load_fiber(const std::string& path);

FibrationLedger parse_ledger_json(const std::string& text);
FibrationLedger load_ledger(const std::string& path);

BaseChangeSpec parse_spec_json(const std::string& text);
BaseChangeSpec load_spec(const std::string& path);

std::string germ_report_json(const std::string& expr, const CurveGerm& germ,
                             const ResolutionReport& rep, const LocalInvariants& li);
std::string hj_report_json(const Int& d, const Int& a, const Int& b,
                           const ChainDescription& cd);
std::string fiber_report_json(const FiberConfig& cfg, const FiberInvariants& fi,
                              const CheckReport& checks);
std::string sstable_report_json(const FiberConfig& cfg, const ResolvedFiber& rf,
                                const Int& d, const CoverGraph& cg,
                                const SemistableModel& model, const Rational& c2_verify,
                                const std::string& beta_verify);
std::string basechange_report_json(const BaseChangeInvariants& bi);
std::string ledger_report_json(const FibrationLedger& ledger,
                               const IsotrivialityInvariants& iso,
                               const CheckReport& checks);

}  // namespace pencil::io
