import { describe, expect, it } from "vitest";

import { BadHeader, EmptyReport, EXPECTED_HEADER, parseReport } from "../src/csv.js";

const GOOD = `${EXPECTED_HEADER}
t1,original,,2,0.7071,4,0.1
t1,srs,0.5,1,1.0000,2,0.2
`;

describe("parseReport", () => {
  it("parses rows with and without alpha", () => {
    const rows = parseReport(GOOD);
    expect(rows).toHaveLength(2);
    expect(rows[0].alpha).toBe("");
    expect(rows[1].alpha).toBe("0.5");
    expect(rows[1].nAttributes).toBe(1);
    expect(rows[0].spatialSimilarity).toBeCloseTo(0.7071, 10);
  });

  it("rejects a wrong header", () => {
    expect(() => parseReport("a,b,c\n1,2,3\n")).toThrow(BadHeader);
  });

  it("rejects ragged rows", () => {
    expect(() => parseReport(`${EXPECTED_HEADER}\nt1,srs,0.5\n`)).toThrow(BadHeader);
  });

  it("rejects a header-only report", () => {
    expect(() => parseReport(`${EXPECTED_HEADER}\n`)).toThrow(EmptyReport);
  });
});
