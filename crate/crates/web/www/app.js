import init, { rips_barcode, compare, sphere_modules } from "./pkg/phdual_web.js";

const $ = (id) => document.getElementById(id);
const colors = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];
let points = [];

function report(fn) {
  try {
    $("error").textContent = "";
    fn();
  } catch (e) {
    $("error").textContent = String(e);
  }
}

function drawPoints() {
  const c = $("points").getContext("2d");
  const r = Number($("radius").value) * 400;
  c.clearRect(0, 0, 400, 400);
  c.fillStyle = "rgba(31,119,180,0.08)";
  for (const [x, y] of points) {
    c.beginPath();
    c.arc(x * 400, y * 400, r / 2, 0, 2 * Math.PI);
    c.fill();
  }
  c.fillStyle = "#000";
  for (const [x, y] of points) {
    c.beginPath();
    c.arc(x * 400, y * 400, 3, 0, 2 * Math.PI);
    c.fill();
  }
}

function drawBars(intervals, rmax) {
  const c = $("bars").getContext("2d");
  const w = $("bars").width;
  c.clearRect(0, 0, w, $("bars").height);
  const h = Math.max(2, Math.min(12, Math.floor(290 / Math.max(1, intervals.length))));
  const x = (v) => {
    if (v === "inf") return w - 10;
    if (v === "-inf") return 10;
    return 10 + (v / rmax) * (w - 30);
  };
  intervals.forEach((iv, i) => {
    c.fillStyle = colors[iv.dim % colors.length];
    const a = x(iv.birth);
    c.fillRect(a, 5 + i * h, Math.max(1, x(iv.death) - a), h - 1);
  });
}

function update() {
  drawPoints();
  const rmax = Number($("radius").value);
  $("radius-out").textContent = rmax.toFixed(2);
  if (points.length === 0) {
    $("cells").textContent = "";
    drawBars([], rmax);
    return;
  }
  report(() => {
    const out = JSON.parse(
      rips_barcode(JSON.stringify(points), rmax, Number($("maxdim").value), $("module").value, $("algorithm").value),
    );
    const byDim = {};
    for (const iv of out.intervals) byDim[iv.dim] = (byDim[iv.dim] || 0) + 1;
    const summary = Object.entries(byDim).map(([d, c]) => `${c} in dim ${d}`).join(", ");
    $("cells").textContent = `${out.cells} cells; bars: ${summary || "none"}`;
    drawBars(out.intervals, rmax);
  });
}

function runCompare() {
  report(() => {
    const out = JSON.parse(compare(JSON.stringify(points), Number($("radius").value), Number($("maxdim").value)));
    $("counters").innerHTML =
      `<tr><th></th><th>ops</th><th>peak elements</th></tr>` +
      `<tr><th>phcol</th><td>${out.phcol.ops}</td><td>${out.phcol.peak}</td></tr>` +
      `<tr><th>pcoh</th><td>${out.pcoh.ops}</td><td>${out.pcoh.peak}</td></tr>` +
      `<tr><th>cells</th><td colspan="2">${out.cells}, pairs ${out.agree ? "agree" : "DIFFER"}</td></tr>`;
  });
}

function runSphere() {
  report(() => {
    const out = JSON.parse(sphere_modules(Number($("field").value)));
    $("sphere-out").innerHTML = "";
    for (const m of out.modules) {
      const h = document.createElement("h3");
      h.textContent = m.module + ": " + m.intervals.map((iv) => iv.label).join(" ");
      const pre = document.createElement("pre");
      pre.textContent = m.generators;
      $("sphere-out").append(h, pre);
    }
  });
}

await init();
$("points").addEventListener("click", (e) => {
  const r = e.target.getBoundingClientRect();
  points.push([(e.clientX - r.left) / 400, (e.clientY - r.top) / 400]);
  update();
});
$("clear").onclick = () => {
  points = [];
  update();
};
$("random").onclick = () => {
  points = Array.from({ length: 30 }, () => [Math.random(), Math.random()]);
  update();
};
for (const id of ["radius", "maxdim", "module", "algorithm"]) $(id).addEventListener("input", update);
$("compare").onclick = runCompare;
$("sphere").onclick = runSphere;
update();
