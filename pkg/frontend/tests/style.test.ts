import { describe, expect, it } from "vitest";

import {
  BASE_FONT_SIZE,
  FADED_OPACITY,
  MAX_FONT_SIZE,
  MIN_LINK_OPACITY,
  keytermFontSize,
  linkOpacity,
} from "../src/style";

describe("linkOpacity", () => {
  it("maps weight 1.0 to full opacity", () => {
    expect(linkOpacity(1.0)).toBe(1.0);
  });

  it("approaches the 0.15 floor for weights near zero", () => {
    expect(linkOpacity(1e-9)).toBeCloseTo(MIN_LINK_OPACITY, 6);
  });

  it("is linear in between", () => {
    expect(linkOpacity(0.5)).toBeCloseTo((MIN_LINK_OPACITY + 1.0) / 2, 12);
    const deltas = [0.1, 0.2, 0.3].map(
      (w) => linkOpacity(w + 0.1) - linkOpacity(w),
    );
    for (const d of deltas) {
      expect(d).toBeCloseTo(deltas[0], 12);
    }
  });

  it("stays above the faded-context opacity", () => {
    expect(linkOpacity(1e-9)).toBeGreaterThan(FADED_OPACITY);
  });
});

describe("keytermFontSize", () => {
  it("spans base size to max size", () => {
    expect(keytermFontSize(0)).toBe(BASE_FONT_SIZE);
    expect(keytermFontSize(1)).toBe(MAX_FONT_SIZE);
  });

  it("scores 0.9 and 0.3 sit in 3:1 proportion above the base offset", () => {
    const above = (s: number) => keytermFontSize(s) - BASE_FONT_SIZE;
    expect(above(0.9) / above(0.3)).toBeCloseTo(3.0, 12);
  });
});
