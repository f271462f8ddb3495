#pragma once

namespace solqsol {

// Global order cap for group construction and subgroup enumeration.
// Default 200; the CLI honors SOLQSOL_MAX_ORDER.
int max_order();
void set_max_order(int cap);

// Automorphism enumeration refuses groups larger than this (default 64).
int automorphism_order_cap();
void set_automorphism_order_cap(int cap);

// RAII guard used by sweeps that legitimately need a larger cap.
struct ScopedMaxOrder {
  explicit ScopedMaxOrder(int cap);
  ~ScopedMaxOrder();
  ScopedMaxOrder(const ScopedMaxOrder&) = delete;
  ScopedMaxOrder& operator=(const ScopedMaxOrder&) = delete;

 private:
  int previous_;
};

}  // namespace solqsol
