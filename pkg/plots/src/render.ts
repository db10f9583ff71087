/** Rendering of a FigureModel: PNG raster and an SVG data layer.
 *
 * The SVG mirrors the PNG geometry and carries the exact numeric value of
 * every bar in a data-value attribute, so tests (and downstream tooling) can
 * read the rendered values back without touching pixels.
 */

import { FigureModel } from "./figure.js";
import { Raster, hexToRgb } from "./raster.js";

const BLACK: [number, number, number] = [0x20, 0x20, 0x20];
const GRID: [number, number, number] = [0xdd, 0xdd, 0xdd];

function tickLabel(v: number): string {
  return Number.isInteger(v) ? String(v) : v.toFixed(1);
}

export function renderPng(model: FigureModel): Buffer {
  const r = new Raster(model.width, model.height);
  const { plot } = model;

  r.text(plot.left, 20, model.title.toUpperCase(), BLACK, 2);

  for (const tick of model.yTicks) {
    const y = Math.round(tick.y);
    if (tick.value > 0) r.hline(plot.left + 1, plot.right, y, GRID);
    const label = tickLabel(tick.value);
    r.text(plot.left - 8 - Raster.textWidth(label), y - 3, label, BLACK);
  }

  for (const bar of model.bars) {
    r.fillRect(bar.x, bar.y, bar.w, bar.h, hexToRgb(bar.color));
  }

  r.vline(plot.left, plot.top, plot.bottom, BLACK);
  r.hline(plot.left, plot.right, plot.bottom, BLACK);

  const groupW = (plot.right - plot.left) / model.groups.length;
  model.groups.forEach((group, gi) => {
    const label = group.length > 18 ? group.slice(0, 17) + "." : group;
    const cx = plot.left + gi * groupW + groupW / 2;
    r.text(cx - Raster.textWidth(label) / 2, plot.bottom + 10, label, BLACK);
  });

  let lx = plot.left + 10;
  const ly = plot.top - 18;
  model.series.forEach((label, si) => {
    const color = model.bars.find((b) => b.series === label)?.color ?? "#000000";
    r.fillRect(lx, ly, 10, 10, hexToRgb(color));
    r.text(lx + 14, ly + 2, label, BLACK);
    lx += 14 + Raster.textWidth(label) + 24;
  });

  return r.toPng();
}

function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderSvg(model: FigureModel): string {
  const { plot } = model;
  const lines: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${model.width}" height="${model.height}" viewBox="0 0 ${model.width} ${model.height}">`,
    `<rect width="${model.width}" height="${model.height}" fill="#ffffff"/>`,
    `<text x="${plot.left}" y="30" font-family="monospace" font-size="20">${esc(model.title)}</text>`,
  ];
  for (const tick of model.yTicks) {
    lines.push(
      `<line x1="${plot.left}" y1="${tick.y}" x2="${plot.right}" y2="${tick.y}" stroke="#dddddd"/>`,
      `<text x="${plot.left - 8}" y="${tick.y + 4}" text-anchor="end" font-family="monospace" font-size="12">${tickLabel(tick.value)}</text>`,
    );
  }
  for (const bar of model.bars) {
    lines.push(
      `<rect class="bar" data-group="${esc(bar.group)}" data-series="${esc(bar.series)}" ` +
        `data-value="${bar.value}" x="${bar.x}" y="${bar.y}" width="${bar.w}" height="${bar.h}" fill="${bar.color}"/>`,
    );
  }
  lines.push(
    `<line x1="${plot.left}" y1="${plot.top}" x2="${plot.left}" y2="${plot.bottom}" stroke="#202020"/>`,
    `<line x1="${plot.left}" y1="${plot.bottom}" x2="${plot.right}" y2="${plot.bottom}" stroke="#202020"/>`,
  );
  const groupW = (plot.right - plot.left) / model.groups.length;
  model.groups.forEach((group, gi) => {
    const cx = plot.left + gi * groupW + groupW / 2;
    lines.push(
      `<text x="${cx}" y="${plot.bottom + 20}" text-anchor="middle" font-family="monospace" font-size="12">${esc(group)}</text>`,
    );
  });
  lines.push("</svg>");
  return lines.join("\n") + "\n";
}
