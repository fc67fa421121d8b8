import assert from "node:assert/strict";
import { test } from "node:test";

import { fnv1a, layoutGraph, mulberry32 } from "../src/layout.js";
import { StoredGraph } from "../src/types.js";
import { fixture } from "./helpers.js";

const school = fixture<StoredGraph>("school-stored.json").graph;
const liverpool = fixture<StoredGraph>("liverpool-stored.json").graph;

test("layout is deterministic for the same document", () => {
  const first = layoutGraph(school);
  const second = layoutGraph(school);
  assert.deepEqual([...first.entries()], [...second.entries()]);
});

test("different documents hash to different layouts", () => {
  const a = layoutGraph(school);
  const b = layoutGraph(liverpool);
  assert.notDeepEqual([...a.values()], [...b.values()]);
});

test("all nodes stay inside the viewport with a margin", () => {
  for (const doc of [school, liverpool]) {
    for (const point of layoutGraph(doc, 720, 480).values()) {
      assert.ok(point.x >= 40 && point.x <= 680);
      assert.ok(point.y >= 40 && point.y <= 440);
    }
  }
});

test("nodes do not collapse onto each other", () => {
  const points = [...layoutGraph(school).values()];
  for (let i = 0; i < points.length; i++) {
    for (let j = i + 1; j < points.length; j++) {
      const gap = Math.hypot(points[i].x - points[j].x, points[i].y - points[j].y);
      assert.ok(gap > 40, `nodes ${i} and ${j} are ${gap}px apart`);
    }
  }
});

test("prng and hash are stable", () => {
  assert.equal(fnv1a("abc"), fnv1a("abc"));
  assert.notEqual(fnv1a("abc"), fnv1a("abd"));
  const r1 = mulberry32(fnv1a("seed"));
  const r2 = mulberry32(fnv1a("seed"));
  for (let k = 0; k < 10; k++) {
    assert.equal(r1(), r2());
  }
});
