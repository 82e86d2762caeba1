#pragma once

#include <string>

#include "context.hpp"
#include "orders.hpp"
#include "reps.hpp"
#include "webgraph.hpp"

namespace weblab::emit {

std::string shape_text(const Shape& s);
Shape parse_shape(const std::string& text);  // "3x2"

std::string enumerate_csv(Context& ctx);
std::string enumerate_json(Context& ctx);

std::string web_json(Context& ctx, int64_t index);
std::string web_json(const webgraph::PlaneWeb& w);
std::string web_dot(const webgraph::PlaneWeb& w);

std::string combo_json(Context& ctx, const skein::WebCombo& combo);

std::string matching_json(const matchdiag::Matching& m);
std::string profile_json(const matchdiag::DepthProfile& p);

std::string poset_json(Context& ctx);
std::string hasse_dot(Context& ctx, orders::OrderKind kind);

std::string transition_csv(Context& ctx, const reps::TransitionMatrix& tm);
std::string transition_json(Context& ctx, const reps::TransitionMatrix& tm);

std::string scan_summary_json(const orders::ScanResult& r);
std::string scan_witness_csv(Context& ctx, const orders::ScanResult& r);

std::string report_json(const reps::Report& r);
std::string report_json(const orders::Report& r);

}  // namespace weblab::emit
