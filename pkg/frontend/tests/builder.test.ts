// Vehicle builder exports must validate against the published vehicle schema.

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";
import { Ajv2020 } from "ajv/dist/2020.js";
import { VehicleBuilder, WHEEL_PALETTE, BODY_PALETTE } from "../src/builder.js";

const schema = JSON.parse(
  readFileSync(new URL("../../docs/schemas/vehicle.schema.json", import.meta.url), "utf8")
);
const ajv = new Ajv2020({ strict: false });
const validate = ajv.compile(schema);

describe("vehicle builder", () => {
  it("exports a schema-valid car", () => {
    const b = new VehicleBuilder("car");
    b.addWheel("wooden_wagon_wheel", [-0.7, 0]);
    b.addWheel("rubber_car_tire", [0.7, 0]);
    b.addPart("cardboard_box", [0, 0.6], 0.1);
    expect(validate(b.export())).toBe(true);
  });

  it("exports every palette entry without schema violations", () => {
    const b = new VehicleBuilder("kitchen-sink");
    WHEEL_PALETTE.forEach((w, i) => b.addWheel(w.type, [i - 1, 0]));
    BODY_PALETTE.forEach((p, i) => b.addPart(p.type, [i * 0.5, 0.5], i * 0.2));
    expect(validate(b.export())).toBe(true);
  });

  it("supports edit and removal round trips", () => {
    const b = new VehicleBuilder("edit");
    const w = b.addWheel("inflatable_inner_tube", [0, 0]);
    const p = b.addPart("skis", [0, 0.3]);
    b.moveWheel(w, [0.5, 0.1]);
    b.movePart(p, [-0.5, 0.4]);
    b.rotatePart(p, Math.PI / 4);
    expect(b.export().wheels[0].anchor).toEqual([0.5, 0.1]);
    b.removeWheel(w);
    b.removePart(p);
    expect(validate(b.export())).toBe(true);
    expect(() => b.removeWheel(0)).toThrow();
  });
});
