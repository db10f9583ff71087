/** CLI: turn a bench report CSV into the comparison figures.
 *
 *   plot_report --in report.csv --out figs/ --which both
 *
 * Writes figure_attrs.png / figure_similarity.png (1200x600) plus matching
 * .svg files whose bar rects carry the exact values in data-value
 * attributes.  Exit code 0 on success, 2 on any error.
 */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { join } from "node:path";
import { parseArgs } from "node:util";

import { parseReport } from "./csv.js";
import { FigureKind, buildFigure } from "./figure.js";
import { renderPng, renderSvg } from "./render.js";

export interface PlotSpec {
  input: string;
  outDir: string;
  which: "attrs" | "similarity" | "both";
}

export function plotReport(spec: PlotSpec): string[] {
  const rows = parseReport(readFileSync(spec.input, "utf-8"));
  mkdirSync(spec.outDir, { recursive: true });
  const kinds: FigureKind[] =
    spec.which === "both" ? ["attrs", "similarity"] : [spec.which];
  const written: string[] = [];
  for (const kind of kinds) {
    const model = buildFigure(rows, kind);
    const png = join(spec.outDir, `figure_${kind}.png`);
    const svg = join(spec.outDir, `figure_${kind}.svg`);
    writeFileSync(png, renderPng(model));
    writeFileSync(svg, renderSvg(model));
    written.push(png, svg);
  }
  return written;
}

export function main(argv: string[]): number {
  try {
    const { values } = parseArgs({
      args: argv,
      options: {
        in: { type: "string" },
        out: { type: "string" },
        which: { type: "string", default: "both" },
      },
    });
    if (!values.in || !values.out) {
      throw new Error("usage: plot_report --in report.csv --out figs/ [--which attrs|similarity|both]");
    }
    if (!["attrs", "similarity", "both"].includes(values.which!)) {
      throw new Error(`unknown figure selection: ${values.which}`);
    }
    const written = plotReport({
      input: values.in,
      outDir: values.out,
      which: values.which as PlotSpec["which"],
    });
    for (const path of written) {
      console.log(`wrote ${path}`);
    }
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 2;
  }
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
