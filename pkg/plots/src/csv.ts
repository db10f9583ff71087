/** Parsing of the bench report CSV (exact column contract). */

export const EXPECTED_HEADER =
  "dataset,algorithm,alpha,n_attributes,spatial_similarity,rule_count,runtime_ms";

export class BadHeader extends Error {}
export class EmptyReport extends Error {}

export interface ReportRow {
  dataset: string;
  algorithm: string;
  /** empty string when the algorithm takes no alpha */
  alpha: string;
  nAttributes: number;
  spatialSimilarity: number;
  ruleCount: number;
  runtimeMs: number;
}

export function parseReport(text: string): ReportRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== "");
  if (lines.length === 0 || lines[0] !== EXPECTED_HEADER) {
    throw new BadHeader(
      `expected header "${EXPECTED_HEADER}", got "${lines[0] ?? ""}"`,
    );
  }
  const rows = lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== 7) {
      throw new BadHeader(`row ${i + 1}: expected 7 fields, got ${cells.length}`);
    }
    const row: ReportRow = {
      dataset: cells[0],
      algorithm: cells[1],
      alpha: cells[2],
      nAttributes: Number(cells[3]),
      spatialSimilarity: Number(cells[4]),
      ruleCount: Number(cells[5]),
      runtimeMs: Number(cells[6]),
    };
    for (const key of ["nAttributes", "spatialSimilarity", "ruleCount"] as const) {
      if (!Number.isFinite(row[key])) {
        throw new BadHeader(`row ${i + 1}: non-numeric ${key}`);
      }
    }
    return row;
  });
  if (rows.length === 0) {
    throw new EmptyReport("report has a header but no rows");
  }
  return rows;
}
