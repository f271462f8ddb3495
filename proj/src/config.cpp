#include "solqsol/config.hpp"

#include <atomic>

namespace solqsol {

namespace {
std::atomic<int> g_max_order{200};
std::atomic<int> g_aut_order_cap{64};
}  // namespace

int max_order() { return g_max_order.load(); }
void set_max_order(int cap) { g_max_order.store(cap); }

int automorphism_order_cap() { return g_aut_order_cap.load(); }
void set_automorphism_order_cap(int cap) { g_aut_order_cap.store(cap); }

ScopedMaxOrder::ScopedMaxOrder(int cap) : previous_(max_order()) { set_max_order(cap); }
ScopedMaxOrder::~ScopedMaxOrder() { set_max_order(previous_); }

}  // namespace solqsol
