/** Visual encoding constants and maps.
 *
 * Link opacity carries the keyterm weight in the overview; inside a focused
 * topic cloud the same weight switches to font size so term importance stays
 * readable while the links render solid.
 */

export const MIN_LINK_OPACITY = 0.15;
export const FADED_OPACITY = 0.08;

export const BASE_FONT_SIZE = 11;
export const MAX_FONT_SIZE = 26;

export const MIN_ZOOM = 0.2;
export const MAX_ZOOM = 5.0;

export const FOCUS_DEBOUNCE_MS = 150;

/** Linear map from link weight in (0, 1] to opacity in [0.15, 1.0]. */
export function linkOpacity(weight: number): number {
  return MIN_LINK_OPACITY + (1 - MIN_LINK_OPACITY) * weight;
}

/** Linear map from keyterm score to label font size: 11 units at score 0
 * up to 26 at score 1. */
export function keytermFontSize(score: number): number {
  return BASE_FONT_SIZE + (MAX_FONT_SIZE - BASE_FONT_SIZE) * score;
}
